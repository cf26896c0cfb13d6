#ifndef NONREP_ERRORS_HPP
#define NONREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nonrep {

// Consecutive walk vertices that are not adjacent.
class invalid_walk : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An SA word whose cyclic closure contradicts the decoded colors.
class inconsistent_word : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A search or enumeration hit its configured node/walk budget.
class budget_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A proven invariant failed on valid input; always an upstream bug.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace nonrep

#endif // NONREP_ERRORS_HPP
