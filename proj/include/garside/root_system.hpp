#ifndef GARSIDE_ROOT_SYSTEM_HPP
#define GARSIDE_ROOT_SYSTEM_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "garside/coxeter_matrix.hpp"
#include "garside/scalar_field.hpp"

namespace garside {

using RootId = std::uint32_t;

// A root as an exact coefficient vector over the simple roots.
struct Root {
  std::vector<Scalar> c;

  bool operator==(const Root& o) const { return c == o.c; }
};

enum class RootSign { positive, negative };

// Interning table assigning stable integer ids to distinct positive roots.
// Interning is injective and idempotent; guarded for concurrent use.
class RootRegistry {
public:
  RootId intern(const Root& r);
  std::optional<RootId> find(const Root& r) const;
  const Root& root(RootId id) const;
  std::size_t size() const;

private:
  static std::vector<Rat> key_of(const Root& r);

  mutable std::mutex mu_;
  std::map<std::vector<Rat>, RootId> index_;
  std::vector<Root> roots_;
};

// The geometric companion of a presentation: the scalar field, the Gram
// matrix of the bilinear form B (unit diagonal, -cos(pi/m) off-diagonal,
// -1 for infinite bonds), simple roots, reflections, and the shared root
// registry.  Immutable after construction apart from registry interning.
class CoxeterSystem {
public:
  explicit CoxeterSystem(CoxeterMatrix matrix);

  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

  const CoxeterMatrix& matrix() const { return matrix_; }
  const ScalarField& field() const { return *field_; }
  int rank() const { return matrix_.rank(); }

  // B(alpha_s, alpha_t)
  const Scalar& gram(int s, int t) const { return gram_[s][t]; }

  const Root& simple_root(int s) const { return simples_[s]; }

  // gamma - 2 B(alpha_s, gamma) alpha_s
  Root reflect_simple(int s, const Root& gamma) const;

  Scalar bilinear(const Root& a, const Root& b) const;
  // B(alpha_s, gamma), the only bilinear values the hot paths need.
  Scalar bilinear_simple(int s, const Root& gamma) const;

  // Coefficient-sign classification; throws MixedSignsError when the vector
  // has both positive and negative entries (not a root).
  RootSign classify_positive(const Root& gamma) const;

  bool is_zero_root(const Root& gamma) const;
  Root negate(const Root& gamma) const;
  // gamma == alpha_s
  bool is_simple(const Root& gamma, int s) const;

  RootRegistry& registry() const { return registry_; }

private:
  CoxeterMatrix matrix_;
  std::shared_ptr<const ScalarField> field_;
  std::vector<std::vector<Scalar>> gram_;
  std::vector<Root> simples_;
  mutable RootRegistry registry_;
};

}  // namespace garside

#endif
