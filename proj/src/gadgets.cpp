/*
 * Copyright 2026 The teamlogic Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "teamlogic/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "teamlogic/error.hpp"
#include "teamlogic/generators.hpp"

namespace teamlogic {

RowMap::RowMap(const Structure& s) {
  require(s.shape().has_value(), "row map is only defined on generated two-path structures");
  n = s.shape()->n;
  row.resize(s.domain_size());
  for (Element e = 0; e < s.domain_size(); ++e) row[e] = row_of(s, e);
}

int mid(const std::vector<int>& p, int n, std::vector<MidState>* trace) {
  const int m = static_cast<int>(p.size());
  require(m <= 28, "mid: sequence too long");
  if (static_cast<long long>(n) < (1LL << (m + 2))) {
    fail("insufficient row budget: mid needs n >= 2^(m+2) = " + std::to_string(1LL << (m + 2)) +
         " rows, got " + std::to_string(n));
  }
  MidState st;
  st.upper = n;
  if (trace) trace->push_back(st);
  for (int i = 1; i <= m; ++i) {
    const int pi = p[i - 1];
    require(pi >= 1 && pi <= n, "mid: row index out of range");
    if (pi - st.lower <= st.upper - pi) {
      st.lower = std::max(st.lower, pi);
    } else {
      st.upper = std::min(st.upper, pi);
    }
    st.round = i;
    st.prefix.push_back(pi);
    if (st.upper - st.lower < (1LL << (m + 1 - i))) fail("internal: mid interval shrank too fast");
    for (int q : st.prefix) {
      if (q > st.lower && q < st.upper) fail("internal: mid interval contains an input row");
    }
    if (trace) trace->push_back(st);
  }
  return (st.lower + st.upper) / 2;
}

Tuple h_swap(std::span<const Element> s, const std::vector<Element>& epsilon, const RowMap& rows,
             int midpoint) {
  Tuple out;
  out.reserve(s.size());
  for (Element e : s) {
    const int r = rows(e);
    if (r == midpoint) fail("h: value on the midpoint row " + std::to_string(midpoint));
    out.push_back(r < midpoint ? e : epsilon.at(e));
  }
  return out;
}

Team swap_team(const Team& z, const Structure& s) {
  const RowMap rows(s);
  const auto eps = epsilon_map(s);
  std::vector<Element> data;
  data.reserve(z.data().size());
  std::vector<int> p(z.width());
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto r = z.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) p[j] = rows(r[j]);
    Tuple img = h_swap(r, eps, rows, mid(p, rows.n));
    data.insert(data.end(), img.begin(), img.end());
  }
  return Team::from_flat(z.vars(), std::move(data), z.size());
}

std::vector<std::string> atomic_type(const Structure& m, const Assignment& s) {
  std::vector<std::string> names = s.vars();
  Tuple values = s.values();
  for (const auto& [name, value] : m.constants()) {
    names.push_back("#" + name);
    values.push_back(value);
  }
  const std::size_t t = names.size();
  std::vector<std::string> facts;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      if (values[i] == values[j]) facts.push_back(names[i] + " = " + names[j]);
    }
  }
  for (const auto& [rel, arity] : m.signature().relations) {
    std::vector<std::size_t> idx(arity, 0);
    Tuple args(arity);
    while (true) {
      for (int a = 0; a < arity; ++a) args[a] = values[idx[a]];
      if (m.holds(rel, args)) {
        std::string fact = rel + "(";
        for (int a = 0; a < arity; ++a) fact += (a ? ", " : "") + names[idx[a]];
        facts.push_back(fact + ")");
      }
      int a = arity - 1;
      while (a >= 0 && ++idx[a] == t) idx[a--] = 0;
      if (a < 0) break;
    }
  }
  std::sort(facts.begin(), facts.end());
  return facts;
}

namespace {

std::string describe(const std::vector<int>& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + ")";
}

std::string describe_tuple(std::span<const Element> t) {
  std::vector<int> v(t.begin(), t.end());
  return describe(v);
}

}  // namespace

SweepResult verify_mid_properties(int m) {
  require(m >= 1 && m <= 4, "mid sweep supports 1 <= m <= 4");
  const int n = 1 << (m + 2);
  SweepResult res;
  // Side pattern bit i: p_i < mid(p). Property 3 says the first i bits only
  // depend on p_1..p_i, so the pattern prefix must be constant per prefix.
  std::vector<std::map<std::vector<int>, std::vector<bool>>> seen(m + 1);
  std::vector<int> p(m, 1);
  while (true) {
    ++res.checked;
    const int md = mid(p, n);
    if (!(1 < md && md < n)) res.violation("property 1: mid" + describe(p) + " = " + std::to_string(md));
    for (int pi : p) {
      if (pi == md) res.violation("property 2: mid" + describe(p) + " = " + std::to_string(md));
    }
    std::vector<bool> side(m);
    for (int i = 0; i < m; ++i) side[i] = p[i] < md;
    for (int len = 1; len <= m; ++len) {
      std::vector<int> key(p.begin(), p.begin() + len);
      std::vector<bool> pattern(side.begin(), side.begin() + len);
      auto [it, inserted] = seen[len].emplace(key, pattern);
      if (!inserted && it->second != pattern) {
        res.violation("property 3: prefix " + describe(key) + " splits inconsistently at " + describe(p));
      }
    }
    int i = m - 1;
    while (i >= 0 && ++p[i] > n) p[i--] = 1;
    if (i < 0) break;
  }
  return res;
}

SweepResult verify_ef_types(int k, int m) {
  require(k >= 1 && m >= 1, "ef sweep needs k, m >= 1");
  const int n = 1 << (m + 2);
  const Structure a = two_path_structure(k, n);
  const auto eps = epsilon_map(a);
  std::map<std::string, Element> swapped;
  for (int j = 1; j <= k; ++j) {
    const std::string c = "c" + std::to_string(j);
    swapped[c] = eps[a.constant(c)];
  }
  const Structure a_eps = a.with_constants(swapped);
  const RowMap rows(a);
  std::vector<std::string> vars;
  for (int i = 1; i <= m; ++i) vars.push_back("x" + std::to_string(i));

  SweepResult res;
  Tuple s(m, 0);
  std::vector<int> p(m);
  while (true) {
    ++res.checked;
    for (int i = 0; i < m; ++i) p[i] = rows(s[i]);
    Tuple hs = h_swap(s, eps, rows, mid(p, n));
    if (atomic_type(a, Assignment(vars, s)) != atomic_type(a_eps, Assignment(vars, hs))) {
      res.violation("atomic type differs for s = " + describe_tuple(s));
    }
    int i = m - 1;
    while (i >= 0 && ++s[i] == a.domain_size()) s[i--] = 0;
    if (i < 0) break;
  }
  return res;
}

SweepResult check_swap_closure(const Structure& a, const Team& x, const std::vector<bool>& universal) {
  SweepResult res;
  const Team sw = swap_team(x, a);
  std::vector<std::string> prefix;
  for (std::size_t p = 0; p < universal.size(); ++p) {
    const Team before = restrict_team(sw, prefix);
    prefix.push_back(x.vars()[p]);
    if (!universal[p]) continue;
    const Team after = restrict_team(sw, prefix);
    for (std::size_t i = 0; i < before.size(); ++i) {
      Tuple row = before.row_tuple(i);
      row.push_back(0);
      for (Element v = 0; v < a.domain_size(); ++v) {
        ++res.checked;
        row.back() = v;
        if (!after.contains(row)) {
          res.violation("position " + std::to_string(p + 1) + ": " + describe_tuple(row) +
                        " missing from swap(X)");
        }
      }
    }
  }
  return res;
}

namespace {

using WitnessFamily = std::function<std::vector<Element>(std::span<const Element>, std::size_t)>;

std::vector<std::pair<std::string, WitnessFamily>> witness_families(const Structure& a,
                                                                    std::uint64_t seed) {
  const auto eps = epsilon_map(a);
  const Element last = a.domain_size() - 1;
  const Element middle = a.domain_size() / 2;
  const int k = a.shape()->k;
  auto prev = [](std::span<const Element> s) -> Element { return s.empty() ? 0 : s.back(); };
  std::vector<std::pair<std::string, WitnessFamily>> out;
  out.emplace_back("const-first", [](std::span<const Element>, std::size_t) { return std::vector<Element>{0}; });
  out.emplace_back("const-middle", [middle](std::span<const Element>, std::size_t) { return std::vector<Element>{middle}; });
  out.emplace_back("const-last", [last](std::span<const Element>, std::size_t) { return std::vector<Element>{last}; });
  out.emplace_back("copy-previous", [prev](std::span<const Element> s, std::size_t) {
    return std::vector<Element>{prev(s)};
  });
  out.emplace_back("eps-previous", [prev, eps](std::span<const Element> s, std::size_t) {
    return std::vector<Element>{eps[prev(s)]};
  });
  out.emplace_back("whole-row", [prev, k](std::span<const Element> s, std::size_t) {
    const Element start = prev(s) / (2 * k) * (2 * k);
    std::vector<Element> v;
    for (Element e = start; e < start + static_cast<Element>(2 * k); ++e) v.push_back(e);
    return v;
  });
  out.emplace_back("random-subset", [seed, last](std::span<const Element> s, std::size_t p) {
    std::uint64_t h = seed ^ (0x9e3779b97f4a7c15ULL * (p + 1));
    for (Element e : s) h = (h ^ e) * 0x100000001b3ULL;
    std::mt19937_64 rng(h);
    std::uniform_int_distribution<Element> pick(0, last);
    std::uniform_int_distribution<int> count(1, 3);
    std::vector<Element> v;
    for (int c = count(rng); c > 0; --c) v.push_back(pick(rng));
    return v;
  });
  return out;
}

}  // namespace

SweepResult verify_swap_closure(int m, int n, std::uint64_t seed) {
  require(m >= 1 && m <= 4, "swap-closure sweep supports 1 <= m <= 4");
  const Structure a = two_path_structure(1, n);
  const auto families = witness_families(a, seed);
  const std::size_t nf = families.size();
  SweepResult total;
  for (std::uint32_t q = 0; q < (1U << m); ++q) {
    std::vector<bool> universal(m);
    std::size_t existentials = 0;
    for (int i = 0; i < m; ++i) {
      universal[i] = ((q >> i) & 1U) != 0;
      if (!universal[i]) ++existentials;
    }
    std::size_t combos = 1;
    for (std::size_t i = 0; i < existentials; ++i) combos *= nf;
    for (std::size_t c = 0; c < combos; ++c) {
      Team x = Team::unit();
      std::size_t code = c;
      std::string label;
      for (int i = 0; i < m; ++i) {
        const std::string var = "x" + std::to_string(i + 1);
        if (universal[i]) {
          x = duplicate_team(x, var, a.domain_size());
          label += "A";
          continue;
        }
        const auto& fam = families[code % nf];
        code /= nf;
        label += "E[" + fam.first + "]";
        x = extend_team(x, var, [&](std::span<const Element> s) { return fam.second(s, i); });
      }
      SweepResult r = check_swap_closure(a, x, universal);
      total.checked += r.checked;
      if (!r.ok()) total.violation(label + ": " + *r.first_violation);
    }
  }
  return total;
}

}  // namespace teamlogic
