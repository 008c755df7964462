#pragma once

#include <ostream>
#include <string>

namespace kalpha::selftest {

// Small-scale invariant suites behind the --selftest flags.  Each prints one
// line per check and returns true when all of them pass.
bool exactnum(std::ostream& os);
bool words(std::ostream& os);
bool cfstrings(std::ostream& os);
bool bifurcation(std::ostream& os);
bool kdynamics(std::ostream& os);
bool natext(std::ostream& os);

bool for_command(const std::string& name, std::ostream& os);

}  // namespace kalpha::selftest
