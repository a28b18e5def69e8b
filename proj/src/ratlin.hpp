// Exact rational scalars, vectors and matrices. Everything in the engine is
// computed over Q; no floating point is used anywhere.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fseries {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;  // row major

// Error carrying a stable machine-readable kind next to the human message.
class engine_error : public std::runtime_error {
 public:
  engine_error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// "p" or "p/q", sign on the numerator, always reduced.
std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);
Int parse_int(const std::string& s);

RatMat rat_identity(std::size_t n);
RatMat rat_transpose(const RatMat& a);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatVec rat_apply(const RatMat& a, const RatVec& v);

// Bilinear form v^T gram w.
Rat rat_dot(const RatVec& v, const RatMat& gram, const RatVec& w);

Rat rat_det(const RatMat& a);

// det of the k x k upper-left block for k = 1..n, in order.
std::vector<Rat> leading_principal_minors(const RatMat& a);

// Sylvester criterion; on failure *bad_minor (1-based) names the first
// non-positive leading principal minor.
bool is_positive_definite(const RatMat& a, int* bad_minor = nullptr);

// Exact inverse; nullopt when singular.
std::optional<RatMat> rat_inverse(const RatMat& a);

// One exact solution of a x = b (free variables set to 0); nullopt when the
// system is inconsistent.
std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b);

Int rat_floor(const Rat& r);
Int isqrt_floor(const Int& n);  // n >= 0

// Membership of v in the Z-lattice spanned by gens (exact, via a Hermite
// normal form after clearing denominators).
bool in_lattice(const std::vector<RatVec>& gens, const RatVec& v);

}  // namespace fseries
