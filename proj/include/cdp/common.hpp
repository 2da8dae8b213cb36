#ifndef CDP_COMMON_HPP
#define CDP_COMMON_HPP

#include <stdexcept>
#include <string>

namespace cdp {

inline constexpr double kPi = 3.14159265358979323846;

// Raised when the input data makes the pipeline ill-defined (duplicate
// points, zero-variance coordinate, collapsed projected edge). Mapped to
// exit code 2 by the CLI.
class DegenerateInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when no pair passes the admissibility threshold. Mapped to exit
// code 3 by the CLI.
class EmptyAdmissibleSetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Kahan compensated accumulator. Keeps sums stable under permutation of
// the input order.
class KahanSum {
public:
    void add(double x) {
        const double y = x - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

} // namespace cdp

#endif
