#include "cogebra/grouphopf.hpp"

#include <cctype>
#include <sstream>

namespace cogebra {

FreeGroup::FreeGroup(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty() || names_[i].find_first_of("*^ ") != std::string::npos)
      throw InputError("free group: bad letter name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == names_[i]) throw InputError("free group: repeated letter '" + names_[i] + "'");
  }
}

FreeGroup FreeGroup::standard(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) names.push_back(rank <= 3 ? std::string(1, "stu"[i]) : "s" + std::to_string(i + 1));
  return FreeGroup(std::move(names));
}

void FreeGroup::check(const GroupWord& w) const {
  for (int l : w)
    if (l == 0 || static_cast<std::size_t>(l < 0 ? -l : l) > rank())
      throw InputError("free group: letter " + std::to_string(l) + " outside an alphabet of size " + std::to_string(rank()));
}

GroupWord FreeGroup::reduce(const GroupWord& w) const {
  check(w);
  GroupWord out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

GroupWord FreeGroup::multiply(const GroupWord& a, const GroupWord& b) const {
  GroupWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return reduce(w);
}

GroupWord FreeGroup::inverse(const GroupWord& w) const {
  check(w);
  GroupWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

bool FreeGroup::is_reduced(const GroupWord& w) const {
  check(w);
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return true;
}

std::string FreeGroup::format(const GroupWord& w) const {
  check(w);
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += names_[static_cast<std::size_t>(std::abs(w[i])) - 1];
    if (w[i] < 0) out += "^-1";
  }
  return out;
}

GroupWord FreeGroup::parse(std::string_view text) const {
  std::string s(text);
  for (char& c : s)
    if (c == '*') c = ' ';
  std::istringstream in(s);
  GroupWord w;
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    bool inv = false;
    if (tok.size() > 3 && tok.ends_with("^-1")) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    std::size_t i = 0;
    while (i < names_.size() && names_[i] != tok) ++i;
    if (i == names_.size()) throw InputError("free group: unknown letter '" + tok + "'");
    w.push_back(inv ? -static_cast<int>(i + 1) : static_cast<int>(i + 1));
  }
  return reduce(w);
}

GroupAlgebraElement GroupAlgebraElement::basis(const Field& f, const FreeGroup& g, const GroupWord& w) {
  GroupAlgebraElement e(f, g);
  e.add_term(w, f.one());
  return e;
}

void GroupAlgebraElement::add_term(const GroupWord& w, const Scalar& c) {
  const GroupWord r = group_.reduce(w);
  auto [it, fresh] = terms_.try_emplace(r, c);
  if (!fresh) it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second)) terms_.erase(it);
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return a.field() == b.field() && a.group() == b.group() && a.terms() == b.terms();
}

namespace {

void require_same(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("group algebra: elements over different fields");
  if (!(a.group() == b.group())) throw InputError("group algebra: elements over different alphabets");
}

}  // namespace

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same(a, b);
  GroupAlgebraElement out = a;
  for (const auto& [w, c] : b.terms()) out.add_term(w, c);
  return out;
}

GroupAlgebraElement scale(const GroupAlgebraElement& a, const Scalar& c) {
  GroupAlgebraElement out(a.field(), a.group());
  for (const auto& [w, x] : a.terms()) out.add_term(w, a.field().mul(c, x));
  return out;
}

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same(a, b);
  const Field& f = a.field();
  GroupAlgebraElement out(f, a.group());
  for (const auto& [u, x] : a.terms())
    for (const auto& [v, y] : b.terms()) out.add_term(a.group().multiply(u, v), f.mul(x, y));
  return out;
}

GroupAlgebraElement antipode(const GroupAlgebraElement& a) {
  GroupAlgebraElement out(a.field(), a.group());
  for (const auto& [w, c] : a.terms()) out.add_term(a.group().inverse(w), c);
  return out;
}

Scalar counit(const GroupAlgebraElement& a) {
  Scalar s = a.field().zero();
  for (const auto& [w, c] : a.terms()) s = a.field().add(s, c);
  return s;
}

std::map<std::pair<GroupWord, GroupWord>, Scalar> comultiply(const GroupAlgebraElement& a) {
  std::map<std::pair<GroupWord, GroupWord>, Scalar> out;
  for (const auto& [w, c] : a.terms()) out.emplace(std::make_pair(w, w), c);
  return out;
}

PresentedAlgebra hopf_envelope_grouplike(const FreeGroup& g, const Field& f) {
  PresentedAlgebra p(f);
  for (const auto& n : g.names()) p.add_generator(n, true);
  return p;
}

EmbeddingReport embedding_check(std::size_t rank, std::size_t d, const Field& f, std::uint64_t budget) {
  if (!f.is_finite()) throw InputError("embedding check: representations are enumerated, so the field must be finite");
  if (d == 0) throw InputError("embedding check: d must be at least 1");
  const PresentedAlgebra p = hopf_envelope_grouplike(FreeGroup::standard(rank), f);
  std::vector<Representation> reps;
  for (std::size_t e = 1; e <= d; ++e) {
    auto all = enumerate_representations(p, e, {budget});
    if (auto orbits = try_orbit_representatives(all, f, budget)) all = std::move(*orbits);
    for (auto& r : all) reps.push_back(std::move(r));
  }
  const CoefficientSpan positive(p, reps);
  const CoefficientSpan all(p, reps, {true});
  EmbeddingReport r;
  r.rank = rank;
  r.d = d;
  r.representations = reps.size();
  r.positive_dim = positive.dim();
  r.all_dim = all.dim();
  r.positive_length = positive.stabilization_length();
  r.all_length = all.stabilization_length();
  r.equal = r.positive_dim == r.all_dim;
  return r;
}

}  // namespace cogebra
