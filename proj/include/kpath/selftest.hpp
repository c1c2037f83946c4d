#pragma once

#include <functional>
#include <string>

namespace kpath {

// Runs the built-in consistency checks: the GF(2^2) and F[Z2^3] worked
// examples, span/dependence identities of the algebra, fast-vs-naive
// multiply agreement, and detector-vs-exact-search spot checks. Reports
// one line per check; returns the number of failed checks.
int run_selftest(const std::function<void(bool ok, const std::string& name)>& report);

}  // namespace kpath
