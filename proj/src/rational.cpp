#include "riccati/rational.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <random>
#include <stdexcept>
#include <vector>

namespace riccati {

std::string format_rational(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
}

double rational_to_double(const Rational& q) { return q.convert_to<double>(); }

long rational_bits(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  long bits = 1;
  if (num != 0) bits += static_cast<long>(boost::multiprecision::msb(abs(num)));
  bits += static_cast<long>(boost::multiprecision::msb(den)) + 1;
  return bits;
}

namespace {

constexpr long kTrialDivisionBound = 100000;

BigInt isqrt_floor(const BigInt& n) { return boost::multiprecision::sqrt(n); }

bool is_perfect_square(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  root = isqrt_floor(n);
  return root * root == n;
}

BigInt mul_mod(const BigInt& a, const BigInt& b, const BigInt& m) {
  return (a * b) % m;
}

bool is_probable_prime(const BigInt& n) {
  static std::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
  return boost::multiprecision::miller_rabin_test(n, 32, gen);
}

// Pollard's rho (Brent variant). n must be composite, odd, > 1.
BigInt pollard_rho(const BigInt& n) {
  static std::mt19937_64 gen(0x2545f4914f6cdd1dULL);
  while (true) {
    BigInt c = BigInt(gen()) % (n - 1) + 1;
    BigInt x = BigInt(gen()) % n;
    BigInt y = x;
    BigInt d = 1;
    while (d == 1) {
      x = (mul_mod(x, x, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      d = boost::multiprecision::gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(const BigInt& n, std::vector<BigInt>& primes) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    primes.push_back(n);
    return;
  }
  const BigInt d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

SquareFreeSplit square_free_split(const BigInt& n) {
  if (n <= 0) throw std::domain_error("square_free_split: argument must be positive");
  BigInt rest = n;
  BigInt root = 1;
  BigInt square_free = 1;

  auto strip = [&](const BigInt& p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 != 0) square_free *= p;
  };

  strip(2);
  strip(3);
  for (long p = 5; p <= kTrialDivisionBound && rest > 1; p += 6) {
    strip(BigInt(p));
    strip(BigInt(p + 2));
  }

  if (rest > 1) {
    BigInt r;
    if (is_perfect_square(rest, r)) {
      root *= r;
    } else if (is_probable_prime(rest)) {
      square_free *= rest;
    } else {
      // Composite with all prime factors above the trial bound.
      std::vector<BigInt> primes;
      factor_into(rest, primes);
      std::sort(primes.begin(), primes.end());
      for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        const std::size_t e = j - i;
        for (std::size_t t = 0; t < e / 2; ++t) root *= primes[i];
        if (e % 2 != 0) square_free *= primes[i];
        i = j;
      }
    }
  }
  return {root, square_free};
}

bool is_square_free(const BigInt& n) {
  if (n <= 0) return false;
  return square_free_split(n).root == 1;
}

SqrtDecomposition sqrt_decompose(const Rational& q) {
  if (q <= 0) throw std::domain_error("sqrt_decompose: argument must be positive");
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  // sqrt(num/den) = sqrt(num*den)/den.
  const SquareFreeSplit split = square_free_split(num * den);
  return {Rational(split.root, den), split.square_free};
}

}  // namespace riccati
