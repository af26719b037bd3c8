#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reesag/errors.hpp"
#include "reesag/field.hpp"

namespace reesag {

inline bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  struct Ctx {
    friend bool operator==(const Ctx&, const Ctx&) { return true; }
  };
  static void validate(const Ctx&) {}
  static Rational from_integer(const Ctx&, const Integer& n) {
    return Rational(n);
  }
  static std::string field_name(const Ctx&) { return "Q"; }
};

template <>
struct FieldTraits<GFp> {
  struct Ctx {
    std::uint64_t p{0};
    friend bool operator==(const Ctx& a, const Ctx& b) { return a.p == b.p; }
  };
  static void validate(const Ctx& c) {
    if (c.p < 2 || c.p >= (1ull << 31) || !is_prime_u64(c.p))
      throw InputError("field characteristic must be a prime below 2^31, got " +
                       std::to_string(c.p));
  }
  static GFp from_integer(const Ctx& c, const Integer& n) {
    return GFp(n, c.p);
  }
  static std::string field_name(const Ctx& c) {
    return "F_" + std::to_string(c.p);
  }
};

// The model of the ambient ring: a power-series ring over the chosen field in
// the given variables, handled through representatives with finitely many
// terms.  Variable order is the term-order precedence (first name largest).
template <class K>
class RingDescriptor {
 public:
  using Ctx = typename FieldTraits<K>::Ctx;

  explicit RingDescriptor(std::vector<std::string> vars, Ctx ctx = Ctx{})
      : vars_(std::move(vars)), ctx_(ctx) {
    if (vars_.empty()) throw InputError("a ring needs at least one variable");
    for (const auto& v : vars_) {
      if (!is_identifier(v))
        throw InputError("invalid variable name '" + v + "'");
    }
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j])
          throw InputError("duplicate variable name '" + vars_[i] + "'");
    FieldTraits<K>::validate(ctx_);
  }

  std::size_t dimension() const noexcept { return vars_.size(); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const std::string& variable_name(std::size_t i) const { return vars_[i]; }
  const Ctx& context() const noexcept { return ctx_; }

  std::optional<std::size_t> variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  K from_integer(const Integer& n) const {
    return FieldTraits<K>::from_integer(ctx_, n);
  }
  K one() const { return from_integer(1); }
  K zero() const { return K{}; }
  std::string field_name() const { return FieldTraits<K>::field_name(ctx_); }

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    return a.vars_ == b.vars_ && a.ctx_ == b.ctx_;
  }
  friend bool operator!=(const RingDescriptor& a, const RingDescriptor& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> vars_;
  Ctx ctx_;
};

template <class K>
using RingPtr = std::shared_ptr<const RingDescriptor<K>>;

template <class K>
RingPtr<K> make_ring(std::vector<std::string> vars,
                     typename FieldTraits<K>::Ctx ctx = {}) {
  return std::make_shared<const RingDescriptor<K>>(std::move(vars), ctx);
}

inline RingPtr<Rational> make_rational_ring(std::vector<std::string> vars) {
  return make_ring<Rational>(std::move(vars));
}

inline RingPtr<GFp> make_prime_ring(std::vector<std::string> vars,
                                    std::uint64_t p) {
  return make_ring<GFp>(std::move(vars), FieldTraits<GFp>::Ctx{p});
}

template <class K>
bool same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace reesag
