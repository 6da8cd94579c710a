// Copyright 2026 The permcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "permcount/verify.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <set>

#include "json.hpp"
#include "permcount/closed_form.hpp"
#include "permcount/matrices.hpp"
#include "permcount/oracle.hpp"
#include "permcount/structure_maps.hpp"

namespace permcount {
namespace {

// Reference values the suite pins against.
struct ReferenceZeroCount {
  std::uint64_t p;
  std::uint64_t value;
  Branch branch;
};

constexpr ReferenceZeroCount kReferenceZeroCounts[] = {
    {3, 3312, Branch::NonQR},     {5, 288000, Branch::NonQR},  {7, 4653936, Branch::QR},
    {11, 192390000, Branch::NonQR}, {13, 739964160, Branch::QR},
};

// n, g(n,0), then the five classes in label order.
constexpr std::array<std::array<std::uint64_t, 7>, 6> kReferenceClassTable = {{
    {3, 3312, 2208, 576, 96, 384, 48},
    {5, 288000, 225280, 38400, 5120, 17920, 1280},
    {7, 4653936, 3900960, 508032, 54432, 181440, 9072},
    {9, 21730032, 14486688, 3779136, 629856, 2519424, 314928},
    {11, 192390000, 173140000, 14520000, 1100000, 3520000, 110000},
    {13, 739964160, 677154816, 49061376, 3234816, 10243584, 269568},
}};

const std::vector<CheckInfo> kRegistry = {
    {"case_census", "zero-pattern rows of G(p,0): oracle vs row formulas"},
    {"case_census.sum", "zero-pattern rows sum to g(p,0)"},
    {"census_agreement", "oracle g(n,x) vs closed form"},
    {"census_total", "oracle census sums to |GL3(Z_n)|"},
    {"class_count", "oracle class census vs closed-form class counts"},
    {"class_sum", "class counts sum to g(p,0)"},
    {"class_table", "reference class table vs closed form"},
    {"composite_value", "reference composite value vs oracle and closed form"},
    {"emptiness", "invertible matrices with no unit sub-permanent"},
    {"engine_agreement", "naive vs tiered census"},
    {"fiber_size", "lifts of a G(p,0) matrix to Z_{p^k} that stay in the fiber"},
    {"fiber_size.total", "p^(k-1) g(p^k,0) = p^(9(k-1)) g(p,0) from oracle counts"},
    {"g2_prime", "2x2 oracle census vs prime-level 2x2 counts"},
    {"multiplicativity", "oracle g(ab,x) vs g(a,x) g(b,x)"},
    {"partition_identity", "|GL3| = p^(k-1) g(p^k,0) + phi(p^k) g(p^k,1), closed form"},
    {"partition_identity.oracle", "same identity with oracle counts"},
    {"prime_power_lifting", "oracle g(p^k,0) vs p^(8(k-1)) oracle g(p,0)"},
    {"prime_power_lifting.class", "oracle class counts lift by p^(8(k-1))"},
    {"qr_branch", "branch of p-3 for the reference primes"},
    {"qr_branch.mod3", "p-3 is a QR mod p iff p = 1 mod 3"},
    {"shift_bijection", "shift images land in G(p^k,x,label), counted against the census"},
    {"shift_bijection.round_trip", "shifting by x then -x returns the source"},
    {"shift_bijection.source", "shift sources match the class census at x = 0"},
    {"sub_permanent_identity", "sub-permanent identity on seeded random matrices"},
    {"two_value.by_divisibility", "g(p^k,x) equals g(p^k,0) or g(p^k,1) by p | x"},
    {"two_value.distinct", "number of distinct values of g(p^k,.)"},
    {"witness.class", "witness matrix class"},
    {"witness.permanent", "witness matrix permanent"},
    {"zero_count", "g(p,0) vs reference value"},
};

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(std::int64_t v) { return std::to_string(v); }

std::optional<std::int64_t> as_int(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// Numeric values order numerically, everything else lexicographically.
bool value_less(const std::string& a, const std::string& b) {
  auto ia = as_int(a), ib = as_int(b);
  if (ia && ib) return *ia < *ib;
  if (ia != ib && (ia || ib)) return ia.has_value();
  return a < b;
}

bool params_less(const Params& a, const Params& b) {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first;
    if (a[i].second != b[i].second) return value_less(a[i].second, b[i].second);
  }
  return a.size() < b.size();
}

std::uint64_t prime_power(std::uint64_t p, unsigned k) { return PrimePower{p, k}.value(); }

class Suite {
 public:
  explicit Suite(const SuiteOptions& opts) : opts_(opts) { census_opts_.threads = opts.threads; }

  std::vector<CheckResult> run() {
    census_agreement();
    engine_agreement();
    two_value();
    lifting();
    zero_counts();
    class_counts();
    case_census();
    multiplicativity();
    partition_identity();
    emptiness();
    sub_permanent_identity();
    shift_bijection();
    fibers();
    witnesses();
    g2();
    sort_results(out_);
    return std::move(out_);
  }

 private:
  bool full() const { return opts_.profile == Profile::Full; }

  void add(std::string_view id, Params params, Natural expected, Natural actual) {
    out_.push_back(CheckResult{std::string(id), std::move(params), std::move(expected),
                               std::move(actual)});
  }

  const CountTable& census_of(std::uint64_t n) {
    auto it = census_cache_.find(n);
    if (it == census_cache_.end())
      it = census_cache_.emplace(n, census(Modulus(n), census_opts_)).first;
    return it->second;
  }

  const ClassCensus& classes_of(std::uint64_t p, unsigned k) {
    const std::uint64_t n = prime_power(p, k);
    auto it = class_cache_.find(n);
    if (it == class_cache_.end()) it = class_cache_.emplace(n, class_census(p, k, census_opts_)).first;
    return it->second;
  }

  std::vector<std::uint64_t> census_moduli() const {
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 2; n <= (full() ? 13u : 9u); ++n) ns.push_back(n);
    return ns;
  }

  std::vector<PrimePower> prime_powers_in_profile() const {
    std::vector<PrimePower> out;
    for (std::uint64_t n : census_moduli()) {
      Modulus m(n);
      if (m.is_prime_power()) out.push_back(m.factors()[0]);
    }
    return out;
  }

  std::vector<std::uint64_t> odd_primes_in_profile() const {
    std::vector<std::uint64_t> ps = {3, 5, 7};
    if (full()) {
      ps.push_back(11);
      ps.push_back(13);
    }
    return ps;
  }

  void census_agreement() {
    for (std::uint64_t n : census_moduli()) {
      const Modulus m(n);
      const CountTable& oracle = census_of(n);
      for (std::uint64_t x = 0; x < n; ++x)
        add("census_agreement", {{"n", str(n)}, {"x", str(x)}},
            g_n(m, static_cast<std::int64_t>(x)), oracle.counts[x]);
      Natural order = 1;
      for (const auto& f : m.factors()) order *= gl3_order(f.p, f.k);
      add("census_total", {{"n", str(n)}}, order, oracle.total());
    }
  }

  void engine_agreement() {
    for (std::uint64_t n = 2; n <= 8; ++n) {
      const CountTable& naive = census_of(n);
      const CountTable tiered = census_tiered(Modulus(n), census_opts_);
      for (std::uint64_t x = 0; x < n; ++x)
        add("engine_agreement", {{"n", str(n)}, {"x", str(x)}}, naive.counts[x], tiered.counts[x]);
    }
  }

  void two_value() {
    std::vector<PrimePower> pks = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}};
    if (full()) {
      pks.push_back({11, 1});
      pks.push_back({13, 1});
    }
    for (const auto& pk : pks) {
      const std::uint64_t n = pk.value();
      const CountTable& t = census_of(n);
      std::set<Natural> distinct(t.counts.begin(), t.counts.end());
      const Params base = {{"p", str(pk.p)}, {"k", str(std::uint64_t{pk.k})}};
      add("two_value.distinct", base, 2, distinct.size());
      for (std::uint64_t x = 0; x < n; ++x) {
        Params ps = base;
        ps.emplace_back("x", str(x));
        add("two_value.by_divisibility", ps, t.counts[x % pk.p == 0 ? 0 : 1], t.counts[x]);
      }
    }
  }

  void lifting() {
    for (const auto& pk : std::vector<PrimePower>{{2, 2}, {2, 3}, {3, 2}}) {
      const Natural factor = ipow(pk.p, 8 * (pk.k - 1));
      add("prime_power_lifting", {{"p", str(pk.p)}, {"k", str(std::uint64_t{pk.k})}},
          factor * census_of(pk.p).counts[0], census_of(pk.value()).counts[0]);
    }
    const auto& base = classes_of(3, 1);
    const auto& lifted = classes_of(3, 2);
    const Natural factor = ipow(3, 8);
    for (ClassLabel l : kClassLabels)
      add("prime_power_lifting.class",
          {{"p", "3"}, {"k", "2"}, {"label", std::string(label_name(l))}},
          factor * base.at(0, l), lifted.at(0, l));
  }

  void zero_counts() {
    for (const auto& pub : kReferenceZeroCounts) {
      const bool in_profile = pub.p <= 7 || full();
      add("zero_count", {{"p", str(pub.p)}, {"source", "closed_form"}}, pub.value, g_p0(pub.p));
      if (in_profile)
        add("zero_count", {{"p", str(pub.p)}, {"source", "oracle"}}, pub.value,
            census_of(pub.p).counts[0]);
      add("qr_branch", {{"p", str(pub.p)}}, pub.branch == Branch::QR ? 1 : 0,
          qr_branch(pub.p) == Branch::QR ? 1 : 0);
    }
    for (std::uint64_t p = 3; p < 1000; p += 2) {
      if (!is_prime(p)) continue;
      add("qr_branch.mod3", {{"p", str(p)}}, p % 3 == 1 ? 1 : 0,
          qr_branch(p) == Branch::QR ? 1 : 0);
    }
  }

  void class_counts() {
    std::vector<PrimePower> pks = {{3, 1}, {5, 1}, {7, 1}, {3, 2}};
    if (full()) {
      pks.push_back({11, 1});
      pks.push_back({13, 1});
    }
    for (const auto& pk : pks) {
      const ClassCensus& cc = classes_of(pk.p, pk.k);
      for (ClassLabel l : kClassLabels)
        add("class_count", {{"n", str(pk.value())}, {"label", std::string(label_name(l))}},
            g_pk0_class(pk.p, pk.k, l), cc.at(0, l));
    }
    for (const auto& row : kReferenceClassTable) {
      const Modulus m(row[0]);
      const auto pk = m.factors()[0];
      add("class_table", {{"n", str(row[0])}, {"column", "g(n,0)"}}, row[1], g_pk0(pk.p, pk.k));
      for (ClassLabel l : kClassLabels)
        add("class_table", {{"n", str(row[0])}, {"column", "g(n,0," + std::string(label_name(l)) + ")"}},
            row[2 + label_index(l)], g_pk0_class(pk.p, pk.k, l));
    }
    for (std::uint64_t p = 3; p < 100; p += 2) {
      if (!is_prime(p)) continue;
      Natural sum = 0;
      for (ClassLabel l : kClassLabels) sum += g_p0_class(p, l);
      add("class_sum", {{"p", str(p)}}, g_p0(p), sum);
    }
  }

  void case_census() {
    for (std::uint64_t p : odd_primes_in_profile()) {
      const CaseCensus oracle = case_census_oracle(p, census_opts_);
      Natural sum = 0;
      for (const auto& row : case_census_closed(p)) {
        add("case_census", {{"p", str(p)}, {"row", std::string(case_row_name(row.row))}},
            row.count, oracle.at(row.row));
        sum += row.count;
      }
      add("case_census.sum", {{"p", str(p)}, {"source", "closed_form"}}, g_p0(p), sum);
      add("case_census.sum", {{"p", str(p)}, {"source", "oracle"}}, g_p0(p), oracle.total());
    }
  }

  void multiplicativity() {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs = {{2, 3}};
    if (full()) {
      pairs.push_back({2, 5});
      pairs.push_back({4, 3});
    }
    for (auto [a, b] : pairs) {
      const std::uint64_t n = a * b;
      const CountTable& whole = census_of(n);
      const CountTable& ta = census_of(a);
      const CountTable& tb = census_of(b);
      for (std::uint64_t x = 0; x < n; ++x)
        add("multiplicativity", {{"n", str(n)}, {"a", str(a)}, {"b", str(b)}, {"x", str(x)}},
            ta.counts[x % a] * tb.counts[x % b], whole.counts[x]);
    }
    add("composite_value", {{"n", "6"}, {"x", "1"}, {"source", "oracle"}}, 665280,
        census_of(6).counts[1]);
    add("composite_value", {{"n", "6"}, {"x", "1"}, {"source", "closed_form"}}, 665280,
        g_n(Modulus(6), 1));
  }

  void partition_identity() {
    for (std::uint64_t q = 2; q <= 27; ++q) {
      const Modulus m(q);
      if (!m.is_prime_power()) continue;
      const auto [p, k] = m.factors()[0];
      const Natural rhs = ipow(p, k - 1) * g_pk0(p, k) + Natural(totient(m)) * g_pk1(p, k);
      add("partition_identity", {{"p", str(p)}, {"k", str(std::uint64_t{k})}}, gl3_order(p, k), rhs);
    }
    for (const auto& pk : prime_powers_in_profile()) {
      const CountTable& t = census_of(pk.value());
      const Natural rhs =
          ipow(pk.p, pk.k - 1) * t.counts[0] + Natural(totient(Modulus(pk.value()))) * t.counts[1];
      add("partition_identity.oracle", {{"p", str(pk.p)}, {"k", str(std::uint64_t{pk.k})}},
          gl3_order(pk.p, pk.k), rhs);
    }
  }

  void emptiness() {
    for (const auto& pk : std::vector<PrimePower>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
      const auto r = emptiness_scan(pk.p, pk.k, census_opts_);
      add("emptiness", {{"p", str(pk.p)}, {"k", str(std::uint64_t{pk.k})}}, 0, r.violations);
    }
  }

  void sub_permanent_identity() {
    std::mt19937_64 rng(opts_.seed);
    for (std::uint64_t n : {4u, 9u, 12u, 49u}) {
      std::uint64_t violations = 0;
      for (std::size_t s = 0; s < opts_.identity_samples; ++s) {
        std::array<std::int64_t, 9> e{};
        for (auto& v : e) v = static_cast<std::int64_t>(rng() % n);
        const Mat3 m(n, e);
        const auto sp = sub_permanents(m);
        const auto a = [&](int i, int j) { return Residue(m.at(i - 1, j - 1), n); };
        const auto c = [n](std::int64_t v) { return Residue(v, n); };
        const Residue lhs = c(2) * a(2, 2) * sp.p22 - a(1, 1) * sp.p11 + a(1, 2) * sp.p12 -
                            c(2) * a(2, 1) * sp.p21 - c(3) * a(1, 3) * sp.p13;
        const Residue rhs = determinant3(m) - c(6) * a(1, 3) * a(2, 1) * a(3, 2);
        if (lhs != rhs) ++violations;
      }
      add("sub_permanent_identity",
          {{"n", str(n)}, {"samples", str(std::uint64_t{opts_.identity_samples})}}, 0, violations);
    }
  }

  void shift_bijection() {
    for (const auto& pk : std::vector<PrimePower>{{3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
      const ClassCensus& cc = classes_of(pk.p, pk.k);
      for (const auto& row : shift_bijection_scan(pk.p, pk.k, census_opts_)) {
        const Params ps = {{"p", str(pk.p)},
                           {"k", str(std::uint64_t{pk.k})},
                           {"x", str(row.x)},
                           {"label", std::string(label_name(row.label))}};
        add("shift_bijection", ps, cc.at(static_cast<std::uint64_t>(row.x), row.label),
            row.images_in_class);
        add("shift_bijection.source", ps, cc.at(0, row.label), row.source);
        add("shift_bijection.round_trip", ps, 0, row.round_trip_failures);
      }
    }
  }

  // Members of G(p, 0) in lexicographic order of their entries.
  static std::vector<Mat3> zero_permanent_members(std::uint64_t p) {
    std::vector<Mat3> out;
    std::uint64_t total = 1;
    for (int i = 0; i < 9; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::array<std::int64_t, 9> e{};
      std::uint64_t v = idx;
      for (int i = 8; i >= 0; --i) {
        e[i] = static_cast<std::int64_t>(v % p);
        v /= p;
      }
      Mat3 m(p, e);
      if (permanent3(m).value() == 0 && is_invertible(m)) out.push_back(m);
    }
    return out;
  }

  void fibers() {
    std::mt19937_64 rng(opts_.seed);
    std::vector<std::tuple<std::uint64_t, unsigned, std::size_t>> plan = {{3, 2, 20}};
    if (full()) plan.emplace_back(5, 2, 2);
    for (auto [p, k, samples] : plan) {
      const auto members = zero_permanent_members(p);
      const Natural expected = ipow(p, 9 * (k - 1));
      std::set<std::size_t> picked;
      while (picked.size() < std::min(samples, members.size())) picked.insert(rng() % members.size());
      for (std::size_t i : picked) {
        add("fiber_size",
            {{"p", str(p)}, {"k", str(std::uint64_t{k})}, {"a", members[i].to_string()}},
            expected, fiber_count(members[i], p, k, census_opts_));
      }
    }
    // p^(k-1) g(p^k, 0) = p^(9(k-1)) g(p, 0) with both sides from the oracle.
    add("fiber_size.total", {{"p", "3"}, {"k", "2"}}, ipow(3, 9) * census_of(3).counts[0],
        ipow(3, 1) * census_of(9).counts[0]);
  }

  void witnesses() {
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
      for (unsigned k = 1; k <= 2; ++k) {
        const std::uint64_t n = prime_power(p, k);
        if (n > 9 && !full()) continue;
        for (std::uint64_t x = 0; x < n; x += p) {
          for (ClassLabel l : kClassLabels) {
            const Mat3 w = witness(l, p, k, static_cast<std::int64_t>(x));
            const Params ps = {{"p", str(p)},
                               {"k", str(std::uint64_t{k})},
                               {"x", str(x)},
                               {"label", std::string(label_name(l))}};
            add("witness.permanent", ps, x, permanent3(w).value());
            add("witness.class", ps, label_index(l), label_index(classify(w, p)));
          }
        }
      }
    }
  }

  void g2() {
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      const CountTable t = census_2x2(Modulus(p), census_opts_);
      for (std::uint64_t x = 0; x < p; ++x)
        add("g2_prime", {{"p", str(p)}, {"x", str(x)}}, g2_prime(p, static_cast<std::int64_t>(x)),
            t.counts[x]);
    }
  }

  SuiteOptions opts_;
  CensusOptions census_opts_;
  std::map<std::uint64_t, CountTable> census_cache_;
  std::map<std::uint64_t, ClassCensus> class_cache_;
  std::vector<CheckResult> out_;
};

}  // namespace

const std::vector<CheckInfo>& check_registry() { return kRegistry; }

std::vector<CheckResult> run_suite(const SuiteOptions& opts) { return Suite(opts).run(); }

std::vector<CheckResult> diff_tables(const CountTable& expected, const CountTable& actual,
                                     std::string_view check_id) {
  if (expected.modulus != actual.modulus || expected.counts.size() != actual.counts.size())
    throw ModulusMismatch("cannot compare tables mod " + str(expected.modulus) + " and mod " +
                          str(actual.modulus));
  std::vector<CheckResult> out;
  out.reserve(expected.counts.size());
  for (std::uint64_t x = 0; x < expected.modulus; ++x)
    out.push_back(CheckResult{std::string(check_id),
                              {{"n", str(expected.modulus)}, {"x", str(x)}},
                              expected.counts[x],
                              actual.counts[x]});
  return out;
}

void sort_results(std::vector<CheckResult>& results) {
  std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    if (a.check_id != b.check_id) return a.check_id < b.check_id;
    return params_less(a.params, b.params);
  });
}

std::size_t count_failures(const std::vector<CheckResult>& results) {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass(); }));
}

void write_json_lines(std::ostream& os, const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = std::move(params);
    j["expected"] = r.expected.str();
    j["actual"] = r.actual.str();
    j["status"] = r.pass() ? "pass" : "fail";
    os << j.dump() << '\n';
  }
}

void write_table(std::ostream& os, const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    std::string params;
    for (const auto& [k, v] : r.params) {
      if (!params.empty()) params += ' ';
      params += k + '=' + v;
    }
    os << (r.pass() ? "PASS " : "FAIL ") << std::left << std::setw(28) << r.check_id << ' '
       << std::setw(44) << params << " expected=" << r.expected.str()
       << " actual=" << r.actual.str() << '\n';
  }
  const std::size_t failed = count_failures(results);
  os << results.size() << " checks, " << results.size() - failed << " passed, " << failed
     << " failed\n";
}

}  // namespace permcount
