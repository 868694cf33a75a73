#pragma once

#define ARGSHIFT_VERSION "0.1.0"
