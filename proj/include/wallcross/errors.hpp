#ifndef WALLCROSS_ERRORS_HPP
#define WALLCROSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wallcross
{

// Malformed or incompatible input: rank/order mismatch, bad file, violated precondition.
class InputError : public std::invalid_argument
{
public:
    explicit InputError(const std::string &what) : std::invalid_argument(what) {}
};

// An internal mathematical assertion failed (monodromy check, cone violation, ...).
// Signals a convention bug or a non-standard input; never corrected silently.
class MathError : public std::logic_error
{
public:
    explicit MathError(const std::string &what) : std::logic_error(what) {}
};

} // namespace wallcross

#endif
