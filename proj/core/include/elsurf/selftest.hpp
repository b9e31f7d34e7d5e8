#pragma once

#include <ostream>

namespace elsurf {

/// Runs every acceptance criterion, printing one pass/fail line per
/// criterion (plus detail lines on failure). Returns the number of failed
/// criteria, so 0 means the whole suite passed.
int run_acceptance(std::ostream& out);

}  // namespace elsurf
