#pragma once

// Finite possibility spaces and the objects that live on them: gambles,
// events, option sets and variables.

#include "credal/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace credal {

class FiniteSpace;
using SpacePtr = std::shared_ptr<const FiniteSpace>;

/// Ordered list of distinct atom labels. The order is fixed at construction
/// and is the order used for every vector indexed by atoms.
class FiniteSpace {
 public:
  static SpacePtr make(std::vector<std::string> atoms);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& atom(std::size_t i) const { return atoms_.at(i); }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws InvalidModel for unknown labels.
  std::size_t index(std::string_view label) const;

  bool operator==(const FiniteSpace& other) const { return atoms_ == other.atoms_; }

 private:
  explicit FiniteSpace(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {}
  std::vector<std::string> atoms_;
};

bool same_space(const SpacePtr& a, const SpacePtr& b);
void require_same_space(const SpacePtr& a, const SpacePtr& b);

class Gamble {
 public:
  Gamble(SpacePtr space, RationalVector values);

  static Gamble constant(SpacePtr space, const Rational& c);
  static Gamble zero(SpacePtr space) { return constant(std::move(space), 0); }

  const SpacePtr& space() const { return space_; }
  const RationalVector& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }

  Rational min() const;
  Rational max() const;
  bool is_zero() const;
  bool is_constant() const;

  Gamble operator-() const;
  Gamble& operator+=(const Gamble& other);
  Gamble& operator-=(const Gamble& other);
  Gamble& operator*=(const Rational& scalar);
  Gamble& operator+=(const Rational& shift);

  /// Pointwise product.
  Gamble times(const Gamble& other) const;

  bool operator==(const Gamble& other) const {
    return same_space(space_, other.space_) && values_ == other.values_;
  }
  /// Lexicographic on values; used to give option sets a canonical order.
  bool operator<(const Gamble& other) const { return values_ < other.values_; }

 private:
  SpacePtr space_;
  RationalVector values_;
};

Gamble operator+(Gamble a, const Gamble& b);
Gamble operator-(Gamble a, const Gamble& b);
Gamble operator*(const Rational& s, Gamble g);
Gamble operator*(Gamble g, const Rational& s);
Gamble operator+(Gamble g, const Rational& c);
Gamble operator-(Gamble g, const Rational& c);

class Event {
 public:
  Event(SpacePtr space, std::vector<bool> members);
  static Event from_labels(SpacePtr space, const std::vector<std::string>& labels);
  static Event empty(SpacePtr space);
  static Event full(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const std::vector<bool>& members() const { return members_; }
  bool contains(std::size_t atom) const { return members_[atom]; }
  std::size_t count() const;
  std::vector<std::string> labels() const;

  Event complement() const;
  Event intersect(const Event& other) const;

  bool operator==(const Event& other) const {
    return same_space(space_, other.space_) && members_ == other.members_;
  }

 private:
  SpacePtr space_;
  std::vector<bool> members_;
};

Gamble indicator(const Event& event);

/// lambda on the event, mu on its complement.
Gamble event_gamble(const Event& event, const Rational& lambda, const Rational& mu);

/// A member of the two-parameter family of gambles that only depend on
/// whether an event occurs.
struct EventGamble {
  Event event;
  Rational lambda;
  Rational mu;

  Gamble gamble() const { return event_gamble(event, lambda, mu); }
};

/// Finite set of gambles on one space. Kept sorted and free of duplicates,
/// so equality is set equality.
class OptionSet {
 public:
  explicit OptionSet(SpacePtr space) : space_(std::move(space)) {}
  OptionSet(SpacePtr space, std::vector<Gamble> gambles);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return gambles_.size(); }
  bool empty() const { return gambles_.empty(); }
  const std::vector<Gamble>& gambles() const { return gambles_; }
  auto begin() const { return gambles_.begin(); }
  auto end() const { return gambles_.end(); }
  const Gamble& operator[](std::size_t i) const { return gambles_[i]; }

  bool contains(const Gamble& g) const;
  std::optional<std::size_t> position(const Gamble& g) const;
  void insert(Gamble g);
  OptionSet without(const Gamble& g) const;
  bool is_subset_of(const OptionSet& other) const;

  bool operator==(const OptionSet& other) const {
    return same_space(space_, other.space_) && gambles_ == other.gambles_;
  }

 private:
  SpacePtr space_;
  std::vector<Gamble> gambles_;
};

/// {g - f : g in A, g != f}. Throws FNotInSet when f is not in A.
OptionSet opt_minus(const OptionSet& options, const Gamble& f);

enum class Dominance { strict_uniform, strict_pointwise, weak };

/// strict_uniform: min(f - g) > 0; strict_pointwise: f >= g and f != g;
/// weak: f >= g everywhere.
bool dominates(const Gamble& f, const Gamble& g, Dominance kind);

/// Map from atoms to labels of a codomain. Need not be surjective.
class Variable {
 public:
  Variable(SpacePtr space, std::vector<std::string> codomain, std::vector<std::size_t> assignment);
  static Variable from_labels(SpacePtr space, std::vector<std::string> codomain,
                              const std::vector<std::string>& assignment);
  /// The identity map on a space.
  static Variable identity(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const SpacePtr& codomain_space() const { return codomain_; }
  const std::vector<std::string>& codomain() const { return codomain_->atoms(); }
  std::size_t codomain_size() const { return codomain_->size(); }
  std::size_t value_index(std::size_t atom) const { return assignment_[atom]; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }

  /// Z^{-1}(C) for a subset C of the codomain.
  Event preimage(const std::vector<bool>& codomain_subset) const;
  Event preimage(const Event& codomain_event) const;
  Event preimage_of_value(std::size_t value) const;

  /// h(Z) = h o Z for a gamble h on the codomain.
  Gamble compose(const Gamble& h) const;
  OptionSet compose(const OptionSet& h) const;

 private:
  SpacePtr space_;
  SpacePtr codomain_;
  std::vector<std::size_t> assignment_;
};

}  // namespace credal
