#include "credal/model_core.hpp"

#include "credal/errors.hpp"

#include <algorithm>
#include <set>

namespace credal {

SpacePtr FiniteSpace::make(std::vector<std::string> atoms) {
  if (atoms.empty()) throw InvalidModel("a possibility space needs at least one atom");
  std::set<std::string> seen;
  for (const auto& a : atoms) {
    if (!seen.insert(a).second) throw InvalidModel("duplicate atom label '" + a + "'");
  }
  return SpacePtr(new FiniteSpace(std::move(atoms)));
}

std::optional<std::size_t> FiniteSpace::find(std::string_view label) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t FiniteSpace::index(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InvalidModel("unknown atom '" + std::string(label) + "'");
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (!same_space(a, b)) throw SpaceMismatch();
}

// ---------------------------------------------------------------- Gamble

Gamble::Gamble(SpacePtr space, RationalVector values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw InvalidModel("gamble without a space");
  if (values_.size() != space_->size()) {
    throw InvalidModel("gamble has " + std::to_string(values_.size()) + " values for " +
                       std::to_string(space_->size()) + " atoms");
  }
}

Gamble Gamble::constant(SpacePtr space, const Rational& c) {
  const std::size_t n = space->size();
  return Gamble(std::move(space), RationalVector(n, c));
}

Rational Gamble::min() const { return *std::min_element(values_.begin(), values_.end()); }
Rational Gamble::max() const { return *std::max_element(values_.begin(), values_.end()); }

bool Gamble::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v.is_zero(); });
}

bool Gamble::is_constant() const {
  return std::all_of(values_.begin(), values_.end(), [&](const Rational& v) { return v == values_[0]; });
}

Gamble Gamble::operator-() const {
  Gamble out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

Gamble& Gamble::operator+=(const Gamble& other) {
  require_same_space(space_, other.space_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

Gamble& Gamble::operator-=(const Gamble& other) {
  require_same_space(space_, other.space_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

Gamble& Gamble::operator*=(const Rational& scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

Gamble& Gamble::operator+=(const Rational& shift) {
  for (auto& v : values_) v += shift;
  return *this;
}

Gamble Gamble::times(const Gamble& other) const {
  require_same_space(space_, other.space_);
  Gamble out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] *= other.values_[i];
  return out;
}

Gamble operator+(Gamble a, const Gamble& b) { return a += b; }
Gamble operator-(Gamble a, const Gamble& b) { return a -= b; }
Gamble operator*(const Rational& s, Gamble g) { return g *= s; }
Gamble operator*(Gamble g, const Rational& s) { return g *= s; }
Gamble operator+(Gamble g, const Rational& c) { return g += c; }
Gamble operator-(Gamble g, const Rational& c) { return g += Rational(-c); }

// ----------------------------------------------------------------- Event

Event::Event(SpacePtr space, std::vector<bool> members)
    : space_(std::move(space)), members_(std::move(members)) {
  if (!space_) throw InvalidModel("event without a space");
  if (members_.size() != space_->size()) throw InvalidModel("event mask does not match space size");
}

Event Event::from_labels(SpacePtr space, const std::vector<std::string>& labels) {
  std::vector<bool> mask(space->size(), false);
  for (const auto& l : labels) mask[space->index(l)] = true;
  return Event(std::move(space), std::move(mask));
}

Event Event::empty(SpacePtr space) {
  const std::size_t n = space->size();
  return Event(std::move(space), std::vector<bool>(n, false));
}

Event Event::full(SpacePtr space) {
  const std::size_t n = space->size();
  return Event(std::move(space), std::vector<bool>(n, true));
}

std::size_t Event::count() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::vector<std::string> Event::labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i]) out.push_back(space_->atom(i));
  }
  return out;
}

Event Event::complement() const {
  std::vector<bool> mask(members_.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = !members_[i];
  return Event(space_, std::move(mask));
}

Event Event::intersect(const Event& other) const {
  require_same_space(space_, other.space_);
  std::vector<bool> mask(members_.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = members_[i] && other.members_[i];
  return Event(space_, std::move(mask));
}

Gamble indicator(const Event& event) { return event_gamble(event, 1, 0); }

Gamble event_gamble(const Event& event, const Rational& lambda, const Rational& mu) {
  RationalVector values(event.space()->size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = event.contains(i) ? lambda : mu;
  return Gamble(event.space(), std::move(values));
}

// ------------------------------------------------------------- OptionSet

OptionSet::OptionSet(SpacePtr space, std::vector<Gamble> gambles) : space_(std::move(space)) {
  for (auto& g : gambles) require_same_space(space_, g.space());
  std::sort(gambles.begin(), gambles.end());
  gambles.erase(std::unique(gambles.begin(), gambles.end()), gambles.end());
  gambles_ = std::move(gambles);
}

std::optional<std::size_t> OptionSet::position(const Gamble& g) const {
  auto it = std::lower_bound(gambles_.begin(), gambles_.end(), g);
  if (it != gambles_.end() && it->values() == g.values()) {
    return static_cast<std::size_t>(it - gambles_.begin());
  }
  return std::nullopt;
}

bool OptionSet::contains(const Gamble& g) const {
  return same_space(space_, g.space()) && position(g).has_value();
}

void OptionSet::insert(Gamble g) {
  require_same_space(space_, g.space());
  auto it = std::lower_bound(gambles_.begin(), gambles_.end(), g);
  if (it != gambles_.end() && it->values() == g.values()) return;
  gambles_.insert(it, std::move(g));
}

OptionSet OptionSet::without(const Gamble& g) const {
  OptionSet out(space_);
  for (const auto& h : gambles_) {
    if (h.values() != g.values()) out.gambles_.push_back(h);
  }
  return out;
}

bool OptionSet::is_subset_of(const OptionSet& other) const {
  if (!same_space(space_, other.space_)) return false;
  return std::all_of(gambles_.begin(), gambles_.end(),
                     [&](const Gamble& g) { return other.position(g).has_value(); });
}

OptionSet opt_minus(const OptionSet& options, const Gamble& f) {
  if (!options.contains(f)) throw FNotInSet();
  std::vector<Gamble> diffs;
  diffs.reserve(options.size());
  for (const auto& g : options) {
    if (g.values() != f.values()) diffs.push_back(g - f);
  }
  return OptionSet(options.space(), std::move(diffs));
}

bool dominates(const Gamble& f, const Gamble& g, Dominance kind) {
  require_same_space(f.space(), g.space());
  bool all_ge = true;
  bool all_gt = true;
  bool some_gt = false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int c = f[i].compare(g[i]);
    if (c < 0) all_ge = false;
    if (c <= 0) all_gt = false;
    if (c > 0) some_gt = true;
  }
  switch (kind) {
    case Dominance::strict_uniform: return all_gt;
    case Dominance::strict_pointwise: return all_ge && some_gt;
    case Dominance::weak: return all_ge;
  }
  return false;
}

// -------------------------------------------------------------- Variable

Variable::Variable(SpacePtr space, std::vector<std::string> codomain, std::vector<std::size_t> assignment)
    : space_(std::move(space)), codomain_(FiniteSpace::make(std::move(codomain))),
      assignment_(std::move(assignment)) {
  if (assignment_.size() != space_->size()) throw InvalidModel("variable assignment does not cover every atom");
  for (auto v : assignment_) {
    if (v >= codomain_->size()) throw InvalidModel("variable assigns a value outside its codomain");
  }
}

Variable Variable::from_labels(SpacePtr space, std::vector<std::string> codomain,
                               const std::vector<std::string>& assignment) {
  auto cod = FiniteSpace::make(codomain);
  std::vector<std::size_t> idx;
  idx.reserve(assignment.size());
  for (const auto& label : assignment) {
    auto i = cod->find(label);
    if (!i) throw InvalidModel("variable value '" + label + "' is not in its codomain");
    idx.push_back(*i);
  }
  return Variable(std::move(space), std::move(codomain), std::move(idx));
}

Variable Variable::identity(SpacePtr space) {
  std::vector<std::size_t> idx(space->size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto labels = space->atoms();
  return Variable(std::move(space), std::move(labels), std::move(idx));
}

Event Variable::preimage(const std::vector<bool>& codomain_subset) const {
  if (codomain_subset.size() != codomain_->size()) throw InvalidModel("codomain subset has the wrong size");
  std::vector<bool> mask(space_->size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = codomain_subset[assignment_[i]];
  return Event(space_, std::move(mask));
}

Event Variable::preimage(const Event& codomain_event) const {
  require_same_space(codomain_, codomain_event.space());
  return preimage(codomain_event.members());
}

Event Variable::preimage_of_value(std::size_t value) const {
  std::vector<bool> subset(codomain_->size(), false);
  subset.at(value) = true;
  return preimage(subset);
}

Gamble Variable::compose(const Gamble& h) const {
  require_same_space(codomain_, h.space());
  RationalVector values(space_->size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = h[assignment_[i]];
  return Gamble(space_, std::move(values));
}

OptionSet Variable::compose(const OptionSet& h) const {
  std::vector<Gamble> out;
  out.reserve(h.size());
  for (const auto& g : h) out.push_back(compose(g));
  return OptionSet(space_, std::move(out));
}

}  // namespace credal
