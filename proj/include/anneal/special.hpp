#pragma once

namespace anneal {

/// sin(x)/x with sinc(0) = 1; Taylor polynomial below |x| = 1e-4.
[[nodiscard]] double sinc(double x) noexcept;

/// Sine integral Si(x) = integral of sin(u)/u from 0 to x.
///
/// Power series for |x| <= 4, continued fraction for E1(ix) beyond, giving
/// close to machine precision over the whole real line. Throws
/// std::domain_error for non-finite x.
[[nodiscard]] double sine_integral(double x);

} // namespace anneal
