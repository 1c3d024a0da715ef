#include "anneal/special.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace anneal {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSeriesLimit = 4.0;
constexpr int kMaxIterations = 500;

double sine_integral_series(double x) noexcept
{
    // sum_k (-1)^k x^(2k+1) / ((2k+1) (2k+1)!)
    const double x2 = x * x;
    double power = x; // x^(2k+1) / (2k+1)!
    double sum = x;
    for (int k = 1; k < kMaxIterations; ++k) {
        power *= -x2 / (static_cast<double>(2 * k) * static_cast<double>(2 * k + 1));
        const double term = power / static_cast<double>(2 * k + 1);
        sum += term;
        if (std::abs(term) < kEps * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

// E1(i x) by modified Lentz on its continued fraction; Si = Im E1(ix) + pi/2.
double sine_integral_continued_fraction(double x) noexcept
{
    using complex = std::complex<double>;
    constexpr double tiny = std::numeric_limits<double>::min() * 4.0;
    constexpr double big = std::numeric_limits<double>::max() * kEps;

    complex b(1.0, x);
    complex c(big, 0.0);
    complex d = 1.0 / b;
    complex h = d;
    for (int i = 1; i < kMaxIterations; ++i) {
        const double a = -static_cast<double>(i) * static_cast<double>(i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        const complex del = c * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) {
            break;
        }
    }
    h *= complex(std::cos(x), -std::sin(x));
    return h.imag() + std::numbers::pi / 2.0;
}

} // namespace

double sinc(double x) noexcept
{
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double sine_integral(double x)
{
    if (!std::isfinite(x)) {
        throw std::domain_error("sine_integral: argument must be finite");
    }
    const double t = std::abs(x);
    const double si = t <= kSeriesLimit ? sine_integral_series(t) : sine_integral_continued_fraction(t);
    return x < 0 ? -si : si;
}

} // namespace anneal
