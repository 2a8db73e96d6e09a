#include "tropmon/presentations.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace tropmon {

void validate(const Presentation& p) {
  std::set<std::string> names;
  for (const auto& g : p.generators)
    if (!names.insert(g).second) throw Error("duplicate generator name: " + g);
  for (const auto& rel : p.relations)
    for (const Word* w : {&rel.lhs, &rel.rhs})
      for (const auto& [g, c] : *w) {
        if (!names.count(g)) throw Error("relation references unknown generator: " + g);
        if (c <= 0) throw Error("relation coefficient must be positive: " + g);
      }
}

IntMatrix relation_matrix(const Presentation& p) {
  std::map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < p.generators.size(); ++j) index[p.generators[j]] = j;
  IntMatrix m(p.relations.size(), p.generators.size());
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    for (const auto& [g, c] : p.relations[i].lhs) m.at(i, index.at(g)) += c;
    for (const auto& [g, c] : p.relations[i].rhs) m.at(i, index.at(g)) -= c;
  }
  return m;
}

std::vector<std::string> torified_zero_generators(const Presentation& p) {
  validate(p);
  IntMatrix m = relation_matrix(p);
  std::set<std::size_t> all;
  for (std::size_t j = 0; j < p.generators.size(); ++j) all.insert(j);
  std::vector<std::string> zero;
  for (std::size_t j = 0; j < p.generators.size(); ++j) {
    if (!strict_lp_feasible(m, {j}, all).has_value()) zero.push_back(p.generators[j]);
  }
  return zero;
}

namespace {

Word drop_generators(const Word& w, const std::set<std::string>& dropped) {
  Word out;
  for (const auto& [g, c] : w)
    if (!dropped.count(g)) out[g] = c;
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  std::string name = base + "'";
  while (taken.count(name)) name += "'";
  return name;
}

}  // namespace

bool presentations_agree(const Presentation& a, const Presentation& b) {
  std::set<std::string> ga(a.generators.begin(), a.generators.end());
  std::set<std::string> gb(b.generators.begin(), b.generators.end());
  return ga == gb && a.relations == b.relations;
}

bool is_bipartite_for(const Presentation& p, const Bipartition& b) {
  std::set<std::string> left(b.left.begin(), b.left.end());
  std::set<std::string> right(b.right.begin(), b.right.end());
  for (const auto& g : p.generators) {
    bool l = left.count(g), r = right.count(g);
    if (l == r) return false;  // missing or on both sides
  }
  if (left.size() + right.size() != p.generators.size()) return false;
  for (const auto& rel : p.relations) {
    for (const auto& [g, c] : rel.lhs)
      if (!left.count(g)) return false;
    for (const auto& [g, c] : rel.rhs)
      if (!right.count(g)) return false;
  }
  return true;
}

SanitizeResult sanitize(const Presentation& input, bool uniform_doubling) {
  validate(input);

  Presentation p = input;

  if (uniform_doubling) {
    // the generic construction: a left copy g' for every generator
    std::set<std::string> taken(p.generators.begin(), p.generators.end());
    std::map<std::string, std::string> left_copy;
    Presentation doubled;
    doubled.generators = p.generators;
    for (const auto& g : p.generators) {
      std::string c = fresh_name(g, taken);
      taken.insert(c);
      left_copy[g] = c;
      doubled.generators.push_back(c);
    }
    for (const auto& rel : p.relations) {
      Word lhs;
      for (const auto& [g, c] : rel.lhs) lhs[left_copy.at(g)] = c;
      doubled.relations.push_back({lhs, rel.rhs});
    }
    for (const auto& g : p.generators) doubled.relations.push_back({{{left_copy.at(g), 1}}, {{g, 1}}});
    p = std::move(doubled);
  }

  // positivity: drop torified-zero generators from everything
  auto zero_list = torified_zero_generators(p);
  std::set<std::string> zero(zero_list.begin(), zero_list.end());
  if (!zero.empty()) {
    Presentation reduced;
    for (const auto& g : p.generators)
      if (!zero.count(g)) reduced.generators.push_back(g);
    for (const auto& rel : p.relations) {
      Relation r{drop_generators(rel.lhs, zero), drop_generators(rel.rhs, zero)};
      if (r.lhs.empty() != r.rhs.empty())
        throw Error("internal: one-sided relation after dropping zero generators");
      if (!r.lhs.empty()) reduced.relations.push_back(std::move(r));
    }
    p = std::move(reduced);
  }

  // bipartition: lhs-only generators go left, rhs-only right, generators on
  // both sides get a left duplicate g' with the linking relation g' = g
  std::set<std::string> on_lhs, on_rhs;
  for (const auto& rel : p.relations) {
    for (const auto& [g, c] : rel.lhs) on_lhs.insert(g);
    for (const auto& [g, c] : rel.rhs) on_rhs.insert(g);
  }

  std::set<std::string> taken(p.generators.begin(), p.generators.end());
  std::map<std::string, std::string> dup;  // original -> left duplicate
  std::vector<std::string> dup_order;
  for (const auto& g : p.generators)
    if (on_lhs.count(g) && on_rhs.count(g)) {
      dup[g] = fresh_name(g, taken);
      taken.insert(dup.at(g));
      dup_order.push_back(g);
    }

  SanitizeResult out;
  out.presentation.generators = p.generators;
  for (const auto& g : dup_order) out.presentation.generators.push_back(dup.at(g));

  for (const auto& rel : p.relations) {
    Word lhs;
    for (const auto& [g, c] : rel.lhs) lhs[dup.count(g) ? dup.at(g) : g] = c;
    out.presentation.relations.push_back({std::move(lhs), rel.rhs});
  }
  for (const auto& g : dup_order)
    out.presentation.relations.push_back({{{dup.at(g), 1}}, {{g, 1}}});

  // identical relations can arise from doubling a relation like b = b
  std::vector<Relation> deduped;
  for (const auto& r : out.presentation.relations)
    if (std::find(deduped.begin(), deduped.end(), r) == deduped.end()) deduped.push_back(r);
  out.presentation.relations = std::move(deduped);

  for (const auto& g : out.presentation.generators) {
    bool left;
    if (dup.count(g))
      left = false;  // original of a duplicated pair stays right
    else if (on_rhs.count(g) && !on_lhs.count(g))
      left = false;
    else
      left = true;  // lhs-only generators, duplicates, and unused generators
    (left ? out.bipartition.left : out.bipartition.right).push_back(g);
  }
  assert(is_bipartite_for(out.presentation, out.bipartition));
  return out;
}

}  // namespace tropmon
