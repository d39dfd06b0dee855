#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tddf {

/// A declared property: asserted true, asserted false, or not known.
enum class Tri { unknown, yes, no };

std::string_view to_string(Tri t);

struct TNormFlags {
  Tri left_continuous = Tri::unknown;
  Tri continuous = Tri::unknown;
  Tri ts = Tri::unknown;                ///< x<x', y<y' => T(x,y) < T(x',y')
  Tri cancellative = Tri::unknown;      ///< T(x,y) = T(x,z) => x = 0 or y = z
  Tri no_zero_divisors = Tri::unknown;  ///< T(x,y) = 0 => x = 0 or y = 0
  Tri cts = Tri::unknown;               ///< as ts, but only when T(x',y') > 0
};

struct LOpFlags {
  Tri right_continuous = Tri::unknown;
  Tri continuous = Tri::unknown;
  Tri nzd = Tri::unknown;
  Tri ls = Tri::unknown;
  Tri lcs = Tri::unknown;
  Tri cl = Tri::unknown;
};

enum class TNormKind { godel, product, lukasiewicz, ordinal, dyadic, custom };
enum class LOpKind { max, plus, w_star, transpose, custom };

using BinaryFn = std::function<double(double, double)>;

/// Commutative, associative, increasing operation on [0,1] with identity 1.
class TNorm {
 public:
  TNorm(std::string id, BinaryFn fn, TNormFlags flags, TNormKind kind = TNormKind::custom,
        bool closed_form = false, std::vector<double> structured = {});

  double operator()(double a, double b) const { return fn_(a, b); }
  const std::string& id() const { return id_; }
  const TNormFlags& flags() const { return flags_; }
  TNormKind kind() const { return kind_; }
  /// Evaluations come from closed-form branches, so equalities are decided exactly.
  bool closed_form() const { return closed_form_; }
  /// Breakpoints and other points where the operation changes character.
  const std::vector<double>& structured_points() const { return structured_; }

 private:
  std::string id_;
  BinaryFn fn_;
  TNormFlags flags_;
  TNormKind kind_;
  bool closed_form_;
  std::vector<double> structured_;
};

/// Commutative, associative, increasing operation on [0,inf] with identity 0
/// and L(x, inf) = inf.
class LOp {
 public:
  LOp(std::string id, BinaryFn fn, LOpFlags flags, LOpKind kind = LOpKind::custom, bool closed_form = false,
      std::vector<double> structured = {}, std::shared_ptr<const TNorm> source = nullptr);

  double operator()(double a, double b) const { return fn_(a, b); }
  const std::string& id() const { return id_; }
  const LOpFlags& flags() const { return flags_; }
  LOpKind kind() const { return kind_; }
  bool closed_form() const { return closed_form_; }
  const std::vector<double>& structured_points() const { return structured_; }
  /// The t-norm this operation is the transpose of, if any.
  const TNorm* source() const { return source_.get(); }

 private:
  std::string id_;
  BinaryFn fn_;
  LOpFlags flags_;
  LOpKind kind_;
  bool closed_form_;
  std::vector<double> structured_;
  std::shared_ptr<const TNorm> source_;
};

/// godel, product, lukasiewicz, ordinal_033_2, dyadic_033_3.
TNorm builtin_tnorm(std::string_view name);
/// max, plus, w_star, or transpose(<builtin t-norm name>).
LOp builtin_lop(std::string_view name);

std::vector<std::string> builtin_tnorm_names();
std::vector<std::string> builtin_lop_names();

/// T*(x,y) = -ln T(e^-x, e^-y), with e^-inf = 0 and -ln 0 = inf.
LOp transpose(const TNorm& t);

/// Expression grammar used on the command line:
///   min | prod | luk | ordinal033_2 | dyadic033_3          (t-norms)
///   max | plus | wstar | transpose(<t-norm expr>)          (L-operations)
/// Registry names (godel, product, ...) are accepted as synonyms.
TNorm parse_tnorm(std::string_view expr);
LOp parse_lop(std::string_view expr);

/// The dyadic block operation F(p,q) = 2pq - (p+q) + 1 on [0.5,1].
double dyadic_block(double p, double q);

struct LawReport {
  bool ok = true;
  std::size_t checks = 0;
  std::string failure;  ///< first violated law with its sample point
};

/// Randomized law suite (commutativity, associativity, monotonicity,
/// identity) over `samples` seeded draws plus boundary values.
LawReport check_laws(const TNorm& t, std::size_t samples = 10000, std::uint64_t seed = 1);
LawReport check_laws(const LOp& l, std::size_t samples = 10000, std::uint64_t seed = 1);

/// Validates a user-supplied operation; throws std::invalid_argument when a law fails.
TNorm register_tnorm(TNorm t);
LOp register_lop(LOp l);

/// Comparison policy for witness conditions: exact for closed forms,
/// otherwise relative tolerance 1e-12.
bool values_equal(double a, double b, bool closed_form);
inline constexpr double kWitnessTolerance = 1e-12;

}  // namespace tddf
