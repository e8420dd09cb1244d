#pragma once

#define PUZZLESPREAD_VERSION "1.0.0"
