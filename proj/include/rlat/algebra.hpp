#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlat/bitset.hpp"
#include "rlat/errors.hpp"

namespace rlat {

/// Index of a carrier element. After canonicalization 0 is the bottom and
/// n-1 the top.
using Element = std::size_t;

/// Largest carrier accepted; subsets must fit one machine word.
inline constexpr std::size_t max_algebra_size = 64;

/// Row-major n*n operation table.
using Table = std::vector<Element>;

/// Unvalidated tables as read from a file or produced by a generator.
struct AlgebraTables {
  std::vector<std::string> names;
  Element bottom = 0;
  Element top = 0;
  Table join, meet, prod;
  std::optional<Table> res;

  std::size_t size() const { return names.size(); }
};

/// One violated law together with the elements that witness it.
struct Violation {
  std::string law;
  std::vector<Element> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every residuated-lattice axiom and reports all failures.
///
/// The order is read off the meet table; the join table is cross-checked
/// against it. When `res` is absent the residuum is derived first and a
/// missing maximum is reported as a "residuated" violation.
/// Throws TableOutOfRange on entries >= n and CapExceeded for n > 64.
ValidationReport validate_algebra(const AlgebraTables& candidate);

/// x -> y := max{z | x*z <= y}. Throws NotResiduated naming the first
/// (x, y) for which the maximum does not exist.
Table residual_from_prod(const AlgebraTables& tables);

class ValidationFailed : public ValidationError {
public:
  explicit ValidationFailed(ValidationReport report);
  const ValidationReport& report() const { return report_; }

private:
  ValidationReport report_;
};

/// A validated finite residuated lattice. Immutable.
class Algebra {
public:
  /// Canonicalizes (bottom -> 0, top -> n-1, the rest in given order),
  /// derives the residuum and validates. Throws ValidationFailed, or
  /// ArrowMismatch when a supplied residuum disagrees with the derived one.
  static Algebra from_tables(AlgebraTables tables);

  std::size_t size() const { return n_; }
  Element bottom() const { return 0; }
  Element top() const { return n_ - 1; }
  ElementSet carrier() const { return ElementSet::full(n_); }

  Element join(Element x, Element y) const { return join_[x * n_ + y]; }
  Element meet(Element x, Element y) const { return meet_[x * n_ + y]; }
  Element prod(Element x, Element y) const { return prod_[x * n_ + y]; }
  Element res(Element x, Element y) const { return res_[x * n_ + y]; }

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  /// {y | x <= y}
  ElementSet up(Element x) const { return up_[x]; }
  /// {y | y <= x}
  ElementSet down(Element x) const { return down_[x]; }

  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(const std::string& name) const;

  /// Tables in canonical element order, arrow included.
  AlgebraTables tables() const;

  bool operator==(const Algebra& o) const {
    return n_ == o.n_ && join_ == o.join_ && meet_ == o.meet_ && prod_ == o.prod_;
  }

private:
  Algebra() = default;

  std::size_t n_ = 0;
  std::vector<std::string> names_;
  Table join_, meet_, prod_, res_;
  std::vector<ElementSet> up_, down_;
};

/// Default labels for generated algebras: "0", "a", "b", ..., "1".
std::vector<std::string> default_names(std::size_t n);

bool leq(const Algebra& alg, Element x, Element y);

/// Pre-linearity: (x->y) v (y->x) = 1 for all x, y.
bool is_mtl(const Algebra& alg);

/// x -> 0
Element negation(const Algebra& alg, Element x);

/// first: x*(y v z) = x*y v x*z; second: x v (y*z) >= (x v y)*(x v z).
std::pair<bool, bool> check_prod_distrib(const Algebra& alg);
std::pair<bool, bool> check_prod_distrib(const AlgebraTables& tables);

/// Join / product of every member of `s`; bottom resp. top on the empty set.
Element join_all(const Algebra& alg, ElementSet s);
Element prod_all(const Algebra& alg, ElementSet s);

/// "{a, b, 1}" using element names.
std::string format_set(const Algebra& alg, ElementSet s);

}  // namespace rlat
