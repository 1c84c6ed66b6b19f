#pragma once

#include <stdexcept>
#include <string>

namespace ferrox {

enum class ErrorKind {
    Domain,       // argument outside the analyticity region
    Parameter,    // parameter hits an excluded set
    Pole,         // gamma pole
    Cut,          // argument on a branch cut
    Convergence,  // series did not converge within the term budget
    Degenerate    // every available connection formula is singular
};

const char* to_string(ErrorKind kind);

class MathError : public std::runtime_error {
public:
    MathError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ferrox
