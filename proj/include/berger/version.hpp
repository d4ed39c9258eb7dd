#pragma once

#define BERGER_VERSION "0.1.0"
