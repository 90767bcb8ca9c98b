#include "cuntz/element.hpp"

#include <algorithm>
#include <cctype>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cuntz/error.hpp"

namespace cuntz {

namespace {

// Binary trie over the common suffix appended to a root pair. Each node may
// carry a coefficient that applies to its whole cone.
class ConeTrie {
 public:
  ConeTrie() : nodes_(1) {}

  void insert(const Word& suffix, const Scalar& c) {
    int node = 0;
    for (int i = 0; i < suffix.size(); ++i) {
      const int letter = suffix[i] - 1;
      int next = nodes_[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(letter)];
      if (next < 0) {
        next = static_cast<int>(nodes_.size());
        nodes_[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(letter)] = next;
        nodes_.emplace_back();
      }
      node = next;
    }
    nodes_[static_cast<std::size_t>(node)].coef += c;
  }

  // Pushes inherited coefficients down to the leaves and merges equal
  // siblings bottom-up; nonzero maximal cones are emitted into `out`.
  void emit(const Word& root_alpha, const Word& root_beta, TermMap& out) {
    root_alpha_ = &root_alpha;
    root_beta_ = &root_beta;
    out_ = &out;
    if (auto leaf = normalize(0, Scalar(0), Word{})) emit_leaf(Word{}, *leaf);
  }

 private:
  struct Node {
    Scalar coef{0};
    std::array<int, 2> child{-1, -1};
  };

  // Returns the constant value if the cone at `node` is constant; otherwise
  // the sub-cones have already been emitted.
  std::optional<Scalar> normalize(int node, const Scalar& inherited, const Word& path) {
    const Node n = nodes_[static_cast<std::size_t>(node)];
    const Scalar total = inherited + n.coef;
    if (n.child[0] < 0 && n.child[1] < 0) return total;

    std::array<std::optional<Scalar>, 2> sub;
    for (std::size_t c = 0; c < 2; ++c) {
      sub[c] = n.child[c] < 0 ? std::optional<Scalar>(total)
                              : normalize(n.child[c], total, path.append(static_cast<int>(c) + 1));
    }
    if (sub[0] && sub[1] && *sub[0] == *sub[1]) return sub[0];
    for (std::size_t c = 0; c < 2; ++c)
      if (sub[c]) emit_leaf(path.append(static_cast<int>(c) + 1), *sub[c]);
    return std::nullopt;
  }

  void emit_leaf(const Word& path, const Scalar& value) {
    if (is_zero(value)) return;
    (*out_)[Term{*root_alpha_ + path, *root_beta_ + path}] = value;
  }

  std::vector<Node> nodes_;
  const Word* root_alpha_ = nullptr;
  const Word* root_beta_ = nullptr;
  TermMap* out_ = nullptr;
};

struct Root {
  Word alpha;
  Word beta;
  friend auto operator<=>(const Root&, const Root&) = default;
};

std::string term_string(const Term& t) {
  if (t.alpha.empty() && t.beta.empty()) return "1";
  if (t.beta.empty()) return "s_{" + t.alpha.str() + "}";
  return "s_{" + (t.alpha.empty() ? std::string("∅") : t.alpha.str()) + "," + t.beta.str() + "}";
}

std::string render(const Element& x, bool spaced) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : x.terms()) {
    const bool negative = c < Scalar(0);
    const Scalar magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else if (spaced) {
      out += negative ? " - " : " + ";
    } else {
      out += negative ? "-" : "+";
    }
    first = false;
    const std::string body = term_string(t);
    if (magnitude != Scalar(1)) {
      out += to_string(magnitude);
      if (body != "1") out += "·" + body;
    } else {
      out += body;
    }
  }
  return out;
}

void add_into(TermMap& acc, const Term& t, const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) acc.erase(it);
  }
}

}  // namespace

Element Element::canonicalize(const TermMap& raw) {
  std::map<Root, std::vector<std::pair<Word, Scalar>>> groups;
  for (const auto& [t, c] : raw) {
    if (cuntz::is_zero(c)) continue;
    int common = 0;
    const int limit = std::min(t.alpha.size(), t.beta.size());
    while (common < limit && t.alpha[t.alpha.size() - 1 - common] == t.beta[t.beta.size() - 1 - common])
      ++common;
    groups[Root{t.alpha.prefix(t.alpha.size() - common), t.beta.prefix(t.beta.size() - common)}]
        .emplace_back(t.alpha.drop_front(t.alpha.size() - common), c);
  }

  TermMap out;
  for (const auto& [root, cones] : groups) {
    if (cones.size() == 1) {
      out[Term{root.alpha + cones.front().first, root.beta + cones.front().first}] = cones.front().second;
      continue;
    }
    ConeTrie trie;
    for (const auto& [suffix, c] : cones) trie.insert(suffix, c);
    trie.emit(root.alpha, root.beta, out);
  }
  return Element(std::move(out));
}

Element Element::unit() { return monomial(Word{}, Word{}); }

Element Element::generator(int i) { return monomial(Word::letter_word(i), Word{}); }

Element Element::monomial(const Word& alpha, const Word& beta, const Scalar& coefficient) {
  TermMap m;
  if (!cuntz::is_zero(coefficient)) m.emplace(Term{alpha, beta}, coefficient);
  return Element(std::move(m));
}

std::set<int> Element::degrees() const {
  std::set<int> out;
  for (const auto& entry : terms_) out.insert(entry.first.degree());
  return out;
}

bool Element::is_gauge_invariant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& e) { return e.first.degree() == 0; });
}

int Element::max_word_length() const {
  int m = 0;
  for (const auto& entry : terms_) m = std::max({m, entry.first.alpha.size(), entry.first.beta.size()});
  return m;
}

Element Element::adjoint() const {
  TermMap out;
  for (const auto& [t, c] : terms_) out.emplace(Term{t.beta, t.alpha}, c);
  return Element(std::move(out));
}

Element operator+(const Element& x, const Element& y) {
  TermMap raw = x.terms_;
  for (const auto& [t, c] : y.terms_) add_into(raw, t, c);
  return Element::canonicalize(raw);
}

Element operator-(const Element& x) { return Scalar(-1) * x; }

Element operator-(const Element& x, const Element& y) { return x + (-y); }

Element operator*(const Scalar& c, const Element& x) {
  if (is_zero(c)) return {};
  TermMap out;
  for (const auto& [t, v] : x.terms_) out.emplace(t, c * v);
  return Element(std::move(out));
}

Element operator*(const Element& x, const Element& y) {
  TermMap raw;
  for (const auto& [tx, cx] : x.terms_) {
    for (const auto& [ty, cy] : y.terms_) {
      // s_a s_b^* s_g s_d^*: the middle collapses iff one of b, g is a prefix
      // of the other.
      if (tx.beta.is_prefix_of(ty.alpha)) {
        add_into(raw, Term{tx.alpha + ty.alpha.drop_front(tx.beta.size()), ty.beta}, cx * cy);
      } else if (ty.alpha.is_prefix_of(tx.beta)) {
        add_into(raw, Term{tx.alpha, ty.beta + tx.beta.drop_front(ty.alpha.size())}, cx * cy);
      }
    }
  }
  return Element::canonicalize(raw);
}

Element multiply(const Element& x, const Element& y) { return x * y; }

Element adjoint(const Element& x) { return x.adjoint(); }

TermMap expand(const Element& x, int levels) {
  TermMap out;
  const std::uint64_t count = std::uint64_t{1} << levels;
  for (const auto& [t, c] : x.terms()) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const Word w = Word::from_index(i, levels);
      add_into(out, Term{t.alpha + w, t.beta + w}, c);
    }
  }
  return out;
}

bool equal_by_expansion(const Element& x, const Element& y) {
  std::map<int, int> depth;  // degree -> common length of the starred word
  for (const Element* e : {&x, &y})
    for (const auto& entry : e->terms()) {
      int& d = depth[entry.first.degree()];
      d = std::max(d, entry.first.beta.size());
    }
  auto expanded = [&](const Element& e) {
    TermMap out;
    for (const auto& [t, c] : e.terms()) {
      const int extra = depth[t.degree()] - t.beta.size();
      const std::uint64_t count = std::uint64_t{1} << extra;
      for (std::uint64_t i = 0; i < count; ++i) {
        const Word w = Word::from_index(i, extra);
        add_into(out, Term{t.alpha + w, t.beta + w}, c);
      }
    }
    return out;
  };
  return expanded(x) == expanded(y);
}

Scalar omega(const Element& x) {
  Scalar total(0);
  for (const auto& [t, c] : x.terms())
    if (t.alpha == t.beta) total += c / Scalar(Integer(1) << t.alpha.size());
  return total;
}

Element gauge_expectation(const Element& x) {
  TermMap out;
  for (const auto& [t, c] : x.terms())
    if (t.degree() == 0) out.emplace(t, c);
  // Dropping whole degree classes keeps the remaining families canonical.
  return Element::canonicalize(out);
}

Element canonical_shift(const Element& x) {
  TermMap raw;
  for (const auto& [t, c] : x.terms())
    for (int i = 1; i <= 2; ++i) {
      const Word l = Word::letter_word(i);
      add_into(raw, Term{l + t.alpha, l + t.beta}, c);
    }
  return Element::canonicalize(raw);
}

std::string to_string(const Element& x) { return render(x, true); }

std::string to_compact_string(const Element& x) { return render(x, false); }

namespace {

class ElementParser {
 public:
  explicit ElementParser(std::string text) : s_(std::move(text)) {
    s_.erase(std::remove_if(s_.begin(), s_.end(), [](unsigned char c) { return std::isspace(c) != 0; }),
             s_.end());
  }

  Element parse() {
    if (s_.empty()) fail("empty input");
    TermMap raw;
    bool first = true;
    while (pos_ < s_.size()) {
      Scalar sign(1);
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        if (s_[pos_] == '-') sign = Scalar(-1);
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [term, coef] = parse_term();
      add_into(raw, term, sign * coef);
    }
    return Element::canonicalize(raw);
  }

 private:
  static constexpr std::string_view dot = "·";

  std::pair<Term, Scalar> parse_term() {
    if (starts_with("s_{")) return {parse_monomial(), Scalar(1)};
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0 || s_[pos_] == '/'))
      ++pos_;
    if (pos_ == start) fail("expected a coefficient or s_{...}");
    const Scalar coef = parse_scalar(s_.substr(start, pos_ - start));
    if (starts_with(dot)) {
      pos_ += dot.size();
      return {parse_monomial(), coef};
    }
    if (starts_with("*")) {
      ++pos_;
      return {parse_monomial(), coef};
    }
    return {Term{}, coef};
  }

  Term parse_monomial() {
    if (!starts_with("s_{")) fail("expected s_{");
    pos_ += 3;
    const std::size_t close = s_.find('}', pos_);
    if (close == std::string::npos) fail("unterminated s_{");
    const std::string body = s_.substr(pos_, close - pos_);
    pos_ = close + 1;
    const std::size_t comma = body.find(',');
    if (comma == std::string::npos) return Term{Word::parse(body), Word{}};
    return Term{Word::parse(body.substr(0, comma)), Word::parse(body.substr(comma + 1))};
  }

  bool starts_with(std::string_view p) const { return std::string_view(s_).substr(pos_).starts_with(p); }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const std::string& text) { return ElementParser(text).parse(); }

}  // namespace cuntz
