#include "cagrow/alphabet.hpp"

// Alphabet is header-only; this unit anchors the library target.
namespace cagrow {}
