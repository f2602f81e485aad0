#include "groundeq/equation.hpp"

#include <algorithm>
#include <map>

#include "groundeq/error.hpp"

namespace groundeq {

namespace {

void occurrence_order(const TermStore& store, TermId t, std::vector<unsigned>& out) {
  if (store.is_ground(t)) return;
  if (store.kind(t) == NodeKind::Var) {
    if (std::find(out.begin(), out.end(), store.var_index(t)) == out.end())
      out.push_back(store.var_index(t));
    return;
  }
  for (TermId c : store.children(t)) occurrence_order(store, c, out);
}

}  // namespace

Equation make_equation(TermStore& store, TermId lhs, TermId rhs) {
  std::vector<unsigned> in_l, in_r;
  occurrence_order(store, lhs, in_l);
  occurrence_order(store, rhs, in_r);
  auto in = [](const std::vector<unsigned>& v, unsigned x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };

  Equation eq;
  std::map<unsigned, unsigned> l_map, r_map;
  unsigned next = 1;
  for (unsigned v : in_l)
    if (in(in_r, v)) {
      l_map[v] = r_map[v] = next++;
      ++eq.shared;
    }
  for (unsigned v : in_l)
    if (!in(in_r, v)) {
      l_map[v] = next++;
      ++eq.left_only;
    }
  for (unsigned v : in_r)
    if (!in(in_l, v)) {
      r_map[v] = next++;
      ++eq.right_only;
    }

  Assignment la, ra;
  for (auto [from, to] : l_map) la[from] = store.var(to);
  for (auto [from, to] : r_map) ra[from] = store.var(to);
  eq.lhs = substitute(store, lhs, la);
  eq.rhs = substitute(store, rhs, ra);
  return eq;
}

bool is_variable_preserving(const Tes& tes) {
  return std::all_of(tes.equations.begin(), tes.equations.end(),
                     [](const Equation& e) { return e.variable_preserving(); });
}

void require_variable_preserving(const Tes& tes) {
  for (std::size_t i = 0; i < tes.equations.size(); ++i)
    if (!tes.equations[i].variable_preserving()) throw NotVariablePreserving(i);
}

bool Gtes::insert(GroundEquation e) {
  if (!index_.insert(e).second) return false;
  order_.push_back(e);
  return true;
}

bool Gtes::subset_of(const Gtes& other) const {
  if (size() > other.size()) return false;
  return std::all_of(order_.begin(), order_.end(),
                     [&](const GroundEquation& e) { return other.contains(e); });
}

bool Gtes::operator==(const Gtes& other) const {
  return size() == other.size() && subset_of(other);
}

void sort_equations(const TermStore& store, std::vector<GroundEquation>& eqs) {
  std::sort(eqs.begin(), eqs.end(), [&](const GroundEquation& a, const GroundEquation& b) {
    auto c = compare_alph(store, a.lhs, b.lhs);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return compare_alph(store, a.rhs, b.rhs) == std::strong_ordering::less;
  });
}

std::string to_string(const TermStore& store, const GroundEquation& e, const char* sep) {
  return to_string(store, e.lhs) + sep + to_string(store, e.rhs);
}

}  // namespace groundeq
