// Copyright 2026 The CCSM Authors.
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

#include "ccsm/transforms.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <string>

#include "ccsm/constraints.hpp"
#include "ccsm/errors.hpp"

namespace ccsm {

namespace {

using Type = TransformKind::Type;

struct Element {
  std::string label;
  Subset support;
};

bool involves_product(const TransformKind& kind) {
  if (kind.type == Type::kGeneralizedProduct) return true;
  return std::any_of(kind.parts.begin(), kind.parts.end(), involves_product);
}

std::string tuple_label(const GroundSet& g, const std::vector<int>& idx, char open, char close) {
  std::string s(1, open);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ',';
    s += g.label(idx[i]);
  }
  s += close;
  return s;
}

Subset support_of(const std::vector<int>& idx) {
  Subset s;
  for (int i : idx) s = s.with(i);
  return s;
}

std::vector<Subset> product_sets(const TransformKind& kind, const GroundSet& ground) {
  std::vector<Subset> out;
  for (const auto& labels : kind.sets) out.push_back(ground.subset(labels));
  return out;
}

BigInt full_size(const TransformKind& kind, const GroundSet& ground) {
  switch (kind.type) {
    case Type::kGeneralizedProduct: {
      BigInt r = 1;
      for (Subset s : product_sets(kind, ground)) r *= s.size();
      return r;
    }
    case Type::kSum: {
      BigInt r = 0;
      for (const auto& p : kind.parts) r += full_size(p, ground);
      return r;
    }
    default:
      return g_value(kind, ground.size());
  }
}

void realize(const TransformKind& kind, const GroundSet& ground, std::vector<Element>& out) {
  const int n = ground.size();
  switch (kind.type) {
    case Type::kConstant:
      for (int i = 1; i <= kind.k; ++i) out.push_back({"*" + std::to_string(i), Subset()});
      return;
    case Type::kPower: {
      std::vector<int> idx(kind.k, 0);
      while (true) {
        out.push_back({tuple_label(ground, idx, '(', ')'), support_of(idx)});
        int i = kind.k - 1;
        while (i >= 0 && idx[i] == n - 1) idx[i--] = 0;
        if (i < 0) return;
        ++idx[i];
      }
    }
    case Type::kBinomial: {
      if (kind.k > n) return;
      for_each_k_subset(Subset::full(n), kind.k, [&](Subset s) {
        const auto idx = s.elements();
        out.push_back({tuple_label(ground, idx, '{', '}'), s});
      });
      return;
    }
    case Type::kSum:
    case Type::kPrimePower: {
      const auto parts = kind.type == Type::kSum ? kind.parts : prime_power_parts(kind.k);
      for (std::size_t p = 0; p < parts.size(); ++p) {
        std::vector<Element> sub;
        realize(parts[p], ground, sub);
        const std::string tag = std::to_string(p + 1) + ":";
        for (auto& e : sub) out.push_back({tag + e.label, e.support});
      }
      return;
    }
    case Type::kGeneralizedProduct: {
      std::vector<std::vector<int>> factors;
      for (Subset s : product_sets(kind, ground)) {
        if (s.empty()) return;
        factors.push_back(s.elements());
      }
      const std::size_t k = factors.size();
      std::vector<std::size_t> pos(k, 0);
      std::vector<int> idx(k);
      while (true) {
        for (std::size_t i = 0; i < k; ++i) idx[i] = factors[i][pos[i]];
        out.push_back({tuple_label(ground, idx, '(', ')'), support_of(idx)});
        std::size_t i = k;
        while (i > 0 && pos[i - 1] + 1 == factors[i - 1].size()) pos[--i] = 0;
        if (i == 0) return;
        ++pos[i - 1];
      }
    }
  }
}

BigInt expected_size_of(const TransformKind& kind, const GroundSet& ground, Subset s) {
  switch (kind.type) {
    case Type::kGeneralizedProduct: {
      BigInt r = 1;
      for (Subset t : product_sets(kind, ground)) r *= (s & t).size();
      return r;
    }
    case Type::kSum: {
      BigInt r = 0;
      for (const auto& p : kind.parts) r += expected_size_of(p, ground, s);
      return r;
    }
    default:
      return g_value(kind, s.size());
  }
}

// Recursive-descent parser over the text form.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TransformKind parse_all() {
    TransformKind k = parse_kind();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return k;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("bad transform kind '" + std::string(text_) + "': " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string w(text_.substr(start, pos_ - start));
    std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) { return std::tolower(c); });
    return w;
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a small nonnegative integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  // Labels run up to the next ',' or ']'.
  std::vector<std::string> label_list() {
    expect('[');
    std::vector<std::string> labels;
    if (eat(']')) return labels;
    while (true) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']') ++pos_;
      std::string l(text_.substr(start, pos_ - start));
      while (!l.empty() && std::isspace(static_cast<unsigned char>(l.back()))) l.pop_back();
      if (l.empty()) fail("empty label");
      labels.push_back(std::move(l));
      if (eat(']')) return labels;
      expect(',');
    }
  }

  TransformKind parse_kind() {
    const std::string name = word();
    if (name == "sum") {
      expect('(');
      std::vector<TransformKind> parts{parse_kind()};
      while (eat(',')) parts.push_back(parse_kind());
      expect(')');
      return TransformKind::sum(std::move(parts));
    }
    if (name == "product") {
      expect('(');
      std::vector<std::vector<std::string>> sets{label_list()};
      while (eat(',')) sets.push_back(label_list());
      expect(')');
      return TransformKind::product(std::move(sets));
    }
    expect(':');
    const int k = integer();
    if (name == "constant") return TransformKind::constant(k);
    if (name == "power") return TransformKind::power(k);
    if (name == "binomial") return TransformKind::binomial(k);
    if (name == "primepower") return TransformKind::prime_power(k);
    fail("unknown kind '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

void validate(const TransformKind& kind) {
  switch (kind.type) {
    case Type::kConstant:
      if (kind.k < 0) throw InputError("Constant needs k >= 0");
      return;
    case Type::kPower:
    case Type::kBinomial:
      if (kind.k < 1) throw InputError("Power and Binomial need k >= 1");
      return;
    case Type::kSum:
      if (kind.parts.empty()) throw InputError("Sum needs at least one part");
      for (const auto& p : kind.parts) validate(p);
      return;
    case Type::kPrimePower:
      if (!is_prime_power(kind.k)) {
        throw InputError(std::to_string(kind.k) + " is not a prime power");
      }
      return;
    case Type::kGeneralizedProduct:
      if (kind.sets.empty()) throw InputError("product needs at least one set");
      return;
  }
}

int declared_level(const TransformKind& kind) {
  validate(kind);
  switch (kind.type) {
    case Type::kConstant: return 0;
    case Type::kPower:
    case Type::kBinomial: return kind.k;
    case Type::kSum: {
      int l = 0;
      for (const auto& p : kind.parts) l = std::max(l, declared_level(p));
      return l;
    }
    case Type::kPrimePower: return kind.k - 1;
    case Type::kGeneralizedProduct: return static_cast<int>(kind.sets.size());
  }
  return 0;
}

BigInt g_value(const TransformKind& kind, std::int64_t x) {
  validate(kind);
  if (x < 0) throw InputError("g is defined on nonnegative integers");
  if (involves_product(kind)) throw InputError("product transforms take one count per set");
  switch (kind.type) {
    case Type::kConstant: return kind.k;
    case Type::kPower: return boost::multiprecision::pow(BigInt(x), kind.k);
    case Type::kBinomial: return binomial(x, kind.k);
    case Type::kSum: {
      BigInt r = 0;
      for (const auto& p : kind.parts) r += g_value(p, x);
      return r;
    }
    case Type::kPrimePower: {
      const int m = kind.k;
      const int p = static_cast<int>(prime_power(m)->prime);
      BigInt odd = 0, even = 0;
      for (int j = 1; j < m; ++j) (j % 2 ? odd : even) += binomial(x, j);
      return odd + (p - 1) * even;
    }
    case Type::kGeneralizedProduct: break;
  }
  return 0;
}

BigInt g_value(const TransformKind& kind, const std::vector<std::int64_t>& xs) {
  validate(kind);
  if (kind.type == Type::kGeneralizedProduct) {
    if (xs.size() != kind.sets.size()) throw InputError("product needs one count per set");
    BigInt r = 1;
    for (std::int64_t x : xs) {
      if (x < 0) throw InputError("counts must be nonnegative");
      r *= x;
    }
    return r;
  }
  if (xs.size() != 1) throw InputError("expected a single count");
  return g_value(kind, xs.front());
}

std::vector<TransformKind> prime_power_parts(int m) {
  const auto pp = prime_power(m);
  if (!pp) throw InputError(std::to_string(m) + " is not a prime power");
  std::vector<TransformKind> parts;
  for (int j = 1; j < m; ++j) {
    const std::int64_t copies = j % 2 ? 1 : pp->prime - 1;
    for (std::int64_t c = 0; c < copies; ++c) parts.push_back(TransformKind::binomial(j));
  }
  return parts;
}

TransformKind parse_transform_kind(std::string_view text) {
  TransformKind k = Parser(text).parse_all();
  validate(k);
  return k;
}

std::string to_string(const TransformKind& kind) {
  switch (kind.type) {
    case Type::kConstant: return "constant:" + std::to_string(kind.k);
    case Type::kPower: return "power:" + std::to_string(kind.k);
    case Type::kBinomial: return "binomial:" + std::to_string(kind.k);
    case Type::kPrimePower: return "primepower:" + std::to_string(kind.k);
    case Type::kSum: {
      std::string s = "sum(";
      for (std::size_t i = 0; i < kind.parts.size(); ++i) {
        if (i) s += ',';
        s += to_string(kind.parts[i]);
      }
      return s + ")";
    }
    case Type::kGeneralizedProduct: {
      std::string s = "product(";
      for (std::size_t i = 0; i < kind.sets.size(); ++i) {
        if (i) s += ',';
        s += '[';
        for (std::size_t j = 0; j < kind.sets[i].size(); ++j) {
          if (j) s += ',';
          s += kind.sets[i][j];
        }
        s += ']';
      }
      return s + ")";
    }
  }
  return "";
}

Bitset TransformResult::image(Subset s) const {
  Bitset b(support.size());
  for (std::size_t w = 0; w < support.size(); ++w) {
    if (support[w].is_subset_of(s)) b.set(w);
  }
  return b;
}

BigInt TransformResult::expected_size(Subset s) const { return expected_size_of(kind, source, s); }

TransformResult apply_transform(const TransformKind& kind, const GroundSet& ground) {
  validate(kind);
  if (ground.size() > kMaxElements) throw UnsupportedError("transforms need |N| <= 64");
  const bool needs_elements = kind.type == Type::kPower || kind.type == Type::kBinomial ||
                              kind.type == Type::kGeneralizedProduct;
  if (needs_elements && ground.size() == 0) throw InputError("transform needs a non-empty ground set");
  if (full_size(kind, ground) > kMaxTransformedSize) {
    throw UnsupportedError("transformed ground set would exceed " +
                           std::to_string(kMaxTransformedSize) + " elements");
  }

  std::vector<Element> elems;
  realize(kind, ground, elems);
  TransformResult r;
  r.kind = kind;
  r.source = ground;
  r.level = declared_level(kind);
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  r.support.reserve(elems.size());
  for (auto& e : elems) {
    labels.push_back(std::move(e.label));
    r.support.push_back(e.support);
  }
  r.ground = GroundSet(std::move(labels));
  return r;
}

TransformReport verify_transform(const TransformKind& kind, int n, std::uint64_t trials,
                                 std::uint64_t seed) {
  if (n < 0 || n > kMaxElements) throw InputError("n must lie in [0, 64]");
  const TransformResult t = apply_transform(kind, GroundSet::numbered(n, 1));
  const Subset full = Subset::full(n);
  TransformReport rep;

  auto describe = [&](Subset s) {
    std::string out = "{";
    bool first = true;
    for (const auto& l : t.source.labels_of(s)) {
      out += (first ? "" : ",") + l;
      first = false;
    }
    return out + "}";
  };
  auto size_ok = [&](Subset s, const Bitset& img) {
    ++rep.subsets;
    if (BigInt(img.count()) == t.expected_size(s)) return true;
    rep.failure = "size law fails at " + describe(s);
    return false;
  };
  auto meet_ok = [&](Subset s, Subset u, const Bitset& gs, const Bitset& gu, const Bitset& gsu) {
    ++rep.pairs;
    if ((gs & gu) == gsu) return true;
    rep.failure = "intersection law fails at " + describe(s) + ", " + describe(u);
    return false;
  };

  const Bitset gn = t.image(full);
  if (!gn.all()) {
    rep.pass = false;
    rep.failure = "G(N) is not all of W";
    return rep;
  }
  for (std::size_t w = 0; w < t.support.size(); ++w) {
    const Subset sigma = t.support[w];
    if (sigma.size() > t.level || !t.image(sigma).test(w)) {
      rep.pass = false;
      rep.failure = "element " + t.ground.label(static_cast<int>(w)) + " lacks a witness within the level";
      return rep;
    }
  }

  if (n <= 8) {
    rep.exhaustive = true;
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<Bitset> images(count);
    for (std::uint64_t b = 0; b < count; ++b) {
      images[b] = t.image(Subset(b));
      if (!size_ok(Subset(b), images[b])) {
        rep.pass = false;
        return rep;
      }
    }
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = 0; b < count; ++b) {
        if (!meet_ok(Subset(a), Subset(b), images[a], images[b], images[a & b])) {
          rep.pass = false;
          return rep;
        }
      }
    }
    return rep;
  }

  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Subset s = Subset(rng()) & full;
    const Subset u = Subset(rng()) & full;
    const Bitset gs = t.image(s), gu = t.image(u);
    if (!size_ok(s, gs) || !meet_ok(s, u, gs, gu, t.image(s & u))) {
      rep.pass = false;
      return rep;
    }
  }
  return rep;
}

SetSystem transform_system(const TransformKind& kind, const SetSystem& h) {
  if (h.ground_size() > kMaxElements) throw UnsupportedError("transforms need |N| <= 64");
  const TransformResult t = apply_transform(kind, h.ground());
  std::vector<Bitset> images;
  images.reserve(h.size());
  for (const auto& member : h.sets()) {
    Subset s;
    for (auto i = member.find_first(); i != Bitset::npos; i = member.find_next(i)) {
      s = s.with(static_cast<int>(i));
    }
    images.push_back(t.image(s));
  }
  return SetSystem::deduplicated(t.ground, std::move(images));
}

ResidueReport prime_power_residue_check(int m, std::int64_t x_max) {
  const auto pp = prime_power(m);
  if (!pp) throw InputError(std::to_string(m) + " is not a prime power");
  const TransformKind kind = TransformKind::prime_power(m);
  ResidueReport rep;
  for (std::int64_t x = 0; x <= x_max; ++x) {
    ++rep.checks;
    const std::int64_t want = x % m == 0 ? 0 : 1;
    if (mod(g_value(kind, x), pp->prime) != want) {
      rep.pass = false;
      rep.counterexample = {{x, 0}};
      return rep;
    }
  }
  return rep;
}

ResidueReport fermat_residue_check(int m, std::int64_t x_max) {
  if (!is_prime(m)) throw InputError(std::to_string(m) + " is not prime");
  const TransformKind kind = TransformKind::power(m - 1);
  ResidueReport rep;
  for (std::int64_t x = 0; x <= x_max; ++x) {
    ++rep.checks;
    const std::int64_t want = x % m == 0 ? 0 : 1;
    if (mod(g_value(kind, x), m) != want) {
      rep.pass = false;
      rep.counterexample = {{x, 0}};
      return rep;
    }
  }
  return rep;
}

}  // namespace ccsm
