#pragma once

#include <stdexcept>
#include <string>

namespace polcount {

// Invalid argument or precondition violation (maps to CLI exit code 2).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An internal cross-check failed: a computed quantity broke an identity that
// must hold by construction.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// CZ + D is singular at the requested Siegel point.
class singular_point_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No sample produced a decisive answer (maps to CLI exit code 4).
class inconclusive_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace polcount
