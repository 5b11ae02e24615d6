#include "charvar/rational.hpp"

// helpers are header-only
