#pragma once

#include <cstdint>
#include <vector>

namespace gosslv {

// Prime field F_p, elements encoded as residues 0..p-1.
// Instances are interned: get(p) returns a process-lifetime singleton, so
// value types hold a bare pointer to their field.  The class is the single
// place that knows the modulus; swapping in small extension fields later
// only means another way to build the op tables.
class PrimeField {
public:
  static const PrimeField& get(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p_; }
  std::uint32_t inv(std::uint32_t a) const;  // a != 0
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Reduce an arbitrary signed integer.
  std::uint32_t from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  PrimeField(const PrimeField&) = delete;
  PrimeField& operator=(const PrimeField&) = delete;

private:
  explicit PrimeField(std::uint32_t p);
  std::uint32_t p_;
  std::vector<std::uint32_t> inv_;
};

// Binomial coefficient mod p via the base-p digit rule.  A negative upper
// index goes through binom(-i, j) = (-1)^j binom(i+j-1, j).
std::uint32_t lucas_binomial(std::int64_t i, std::uint64_t j, const PrimeField& F);

}  // namespace gosslv
