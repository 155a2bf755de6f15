#include "assoc/expression.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace assoc::multiplihedron {

Factor Factor::bracket(std::vector<Factor> parts) {
  if (parts.size() < 2) throw std::invalid_argument("a bracketed factor needs at least two parts");
  return {0, std::move(parts)};
}

Block Block::word(std::vector<Factor> items) {
  if (items.empty()) throw std::invalid_argument("empty argument");
  if (items.size() == 1 && !items.front().is_atom()) items = std::vector<Factor>(items.front().parts);
  return {false, std::move(items)};
}

Block Block::dots(std::vector<Factor> segments) {
  if (segments.size() < 2) throw std::invalid_argument("a dotted argument needs at least two segments");
  return {true, std::move(segments)};
}

Term Term::product(std::vector<Term> parts) {
  if (parts.size() < 2) throw std::invalid_argument("a codomain product needs at least two terms");
  return {false, {}, std::move(parts)};
}

std::string to_string(const Factor& f) {
  if (f.is_atom()) return "a" + std::to_string(f.atom);
  std::string out = "(";
  for (const auto& p : f.parts) out += to_string(p);
  return out + ")";
}

std::string to_string(const Block& b) {
  std::string out = "f(";
  for (std::size_t i = 0; i < b.items.size(); ++i) {
    if (i && b.dotted) out += '.';
    out += to_string(b.items[i]);
  }
  return out + ")";
}

namespace {

std::string inner(const Term& t) {
  if (t.is_block) return to_string(t.block);
  std::string out;
  for (const auto& p : t.parts) out += to_string(p);
  return out;
}

}  // namespace

std::string to_string(const Term& t) { return t.is_block ? to_string(t.block) : "(" + inner(t) + ")"; }

std::string to_string(const Expression& e) { return inner(e.root); }

std::string to_string(const FlatExpression& e) {
  std::string out;
  for (const auto& b : e.blocks) out += to_string(b);
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression expression() {
    std::vector<Term> items;
    while (!done()) items.push_back(term());
    if (items.empty()) fail("empty expression");
    finish();
    return {items.size() == 1 ? items.front() : Term::product(std::move(items))};
  }

  FlatExpression flat() {
    FlatExpression e;
    while (!done()) {
      if (peek() != 'f') fail("expected 'f('");
      e.blocks.push_back(block());
    }
    if (e.blocks.empty()) fail("empty expression");
    finish();
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int letter_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad expression '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  bool dot() {
    skip();
    if (text_.substr(pos_, 1) == ".") {
      pos_ += 1;
      return true;
    }
    if (text_.substr(pos_, 2) == "\xC2\xB7") {
      pos_ += 2;
      return true;
    }
    return false;
  }
  void finish() {
    if (!done()) fail("trailing characters");
  }

  Term term() {
    if (peek() == 'f') return Term::of(block());
    expect('(');
    std::vector<Term> parts;
    while (peek() != ')') {
      if (done()) fail("unbalanced '('");
      parts.push_back(term());
    }
    ++pos_;
    if (parts.size() < 2) fail("a codomain product needs at least two terms");
    return Term::product(std::move(parts));
  }

  Block block() {
    expect('f');
    expect('(');
    std::vector<Factor> items{factor()};
    bool dotted = false;
    bool juxtaposed = false;
    while (peek() != ')') {
      if (done()) fail("unbalanced '('");
      if (dot()) dotted = true;
      else juxtaposed = true;
      items.push_back(factor());
    }
    ++pos_;
    if (dotted && juxtaposed) fail("dots and juxtaposition mixed in one argument");
    return dotted ? Block::dots(std::move(items)) : Block::word(std::move(items));
  }

  Factor factor() {
    char ch = peek();
    if (ch == 'a') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("letter without index");
      int i = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (i != letter_ + 1) fail("letters must be a1, a2, ... in order");
      letter_ = i;
      return Factor::letter(i);
    }
    if (ch != '(') fail("expected a letter or '('");
    ++pos_;
    std::vector<Factor> parts;
    while (peek() != ')') {
      if (done()) fail("unbalanced '('");
      parts.push_back(factor());
    }
    ++pos_;
    if (parts.size() < 2) fail("redundant or empty domain bracket");
    return Factor::bracket(std::move(parts));
  }
};

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).expression(); }
FlatExpression parse_flat_expression(std::string_view text) { return Parser(text).flat(); }

namespace {

int last_letter(const Term& t) { return t.is_block ? t.block.last() : last_letter(t.parts.back()); }

}  // namespace

int letters(const Expression& e) { return last_letter(e.root); }
int letters(const FlatExpression& e) { return e.blocks.back().last(); }

namespace {

using Range = std::pair<int, int>;

const std::vector<std::vector<Factor>>& words(int lo, int hi);

const std::vector<Factor>& factors(int lo, int hi) {
  static std::map<Range, std::vector<Factor>> memo;
  if (auto it = memo.find({lo, hi}); it != memo.end()) return it->second;
  std::vector<Factor> out;
  if (lo == hi) {
    out.push_back(Factor::letter(lo));
  } else {
    for (const auto& w : words(lo, hi)) out.push_back(Factor::bracket(w));
  }
  return memo.emplace(Range{lo, hi}, std::move(out)).first->second;
}

// all ways to cover lo..hi by at least two consecutive factors
const std::vector<std::vector<Factor>>& words(int lo, int hi) {
  static std::map<Range, std::vector<std::vector<Factor>>> memo;
  if (auto it = memo.find({lo, hi}); it != memo.end()) return it->second;
  std::vector<std::vector<Factor>> out;
  for (int mid = lo; mid < hi; ++mid)
    for (const auto& head : factors(lo, mid)) {
      for (const auto& last : factors(mid + 1, hi)) out.push_back({head, last});
      for (const auto& rest : words(mid + 1, hi)) {
        std::vector<Factor> w{head};
        w.insert(w.end(), rest.begin(), rest.end());
        out.push_back(std::move(w));
      }
    }
  return memo.emplace(Range{lo, hi}, std::move(out)).first->second;
}

const std::vector<Block>& blocks(int lo, int hi) {
  static std::map<Range, std::vector<Block>> memo;
  if (auto it = memo.find({lo, hi}); it != memo.end()) return it->second;
  std::vector<Block> out;
  if (lo == hi) {
    out.push_back(Block::word({Factor::letter(lo)}));
  } else {
    for (const auto& w : words(lo, hi)) out.push_back(Block::word(w));
    for (const auto& w : words(lo, hi)) out.push_back(Block::dots(w));
  }
  return memo.emplace(Range{lo, hi}, std::move(out)).first->second;
}

template <class T, class Part>
void cover(int lo, int hi, const Part& part, std::vector<T>& cur, std::vector<std::vector<T>>& out) {
  if (lo > hi) {
    out.push_back(cur);
    return;
  }
  for (int mid = lo; mid <= hi; ++mid)
    for (const auto& x : part(lo, mid)) {
      cur.push_back(x);
      cover(mid + 1, hi, part, cur, out);
      cur.pop_back();
    }
}

const std::vector<Term>& terms(int lo, int hi) {
  static std::map<Range, std::vector<Term>> memo;
  if (auto it = memo.find({lo, hi}); it != memo.end()) return it->second;
  std::vector<Term> out;
  for (const auto& b : blocks(lo, hi)) out.push_back(Term::of(b));
  if (lo < hi) {
    std::vector<std::vector<Term>> seqs;
    std::vector<Term> cur;
    // products split the range, so every part is over a shorter range
    for (int mid = lo; mid < hi; ++mid)
      for (const auto& head : terms(lo, mid)) {
        cur = {head};
        cover(mid + 1, hi, terms, cur, seqs);
      }
    for (auto& s : seqs) out.push_back(Term::product(std::move(s)));
  }
  return memo.emplace(Range{lo, hi}, std::move(out)).first->second;
}

}  // namespace

std::vector<Expression> enumerate_expressions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_expressions needs n >= 1");
  std::vector<Expression> out;
  for (const auto& t : terms(1, n)) out.push_back({t});
  return out;
}

std::vector<FlatExpression> enumerate_flat_expressions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_flat_expressions needs n >= 1");
  std::vector<std::vector<Block>> seqs;
  std::vector<Block> cur;
  cover(1, n, blocks, cur, seqs);
  std::vector<FlatExpression> out;
  for (auto& s : seqs) out.push_back({std::move(s)});
  return out;
}

namespace {

// one domain bracket removed somewhere strictly inside f
std::vector<Factor> factor_moves(const Factor& f);

// one domain bracket removed in a word; `top` allows splicing its own items
std::vector<std::vector<Factor>> word_moves(const std::vector<Factor>& w, bool top) {
  std::vector<std::vector<Factor>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_atom()) continue;
    if (top) {
      std::vector<Factor> spliced(w.begin(), w.begin() + static_cast<long>(i));
      spliced.insert(spliced.end(), w[i].parts.begin(), w[i].parts.end());
      spliced.insert(spliced.end(), w.begin() + static_cast<long>(i) + 1, w.end());
      out.push_back(std::move(spliced));
    }
    for (auto& g : factor_moves(w[i])) {
      auto copy = w;
      copy[i] = std::move(g);
      out.push_back(std::move(copy));
    }
  }
  return out;
}

std::vector<Factor> factor_moves(const Factor& f) {
  std::vector<Factor> out;
  if (f.is_atom()) return out;
  for (auto& w : word_moves(f.parts, true)) out.push_back(Factor::bracket(std::move(w)));
  return out;
}

std::vector<Block> block_moves(const Block& b) {
  std::vector<Block> out;
  if (!b.dotted) {
    for (auto& w : word_moves(b.items, true)) out.push_back(Block::word(std::move(w)));
    if (b.items.size() >= 2) out.push_back(Block::dots(b.items));
  } else {
    for (auto& w : word_moves(b.items, false)) out.push_back(Block::dots(std::move(w)));
    for (std::size_t i = 0; i < b.items.size(); ++i) {
      if (b.items[i].is_atom()) continue;
      std::vector<Factor> segs(b.items.begin(), b.items.begin() + static_cast<long>(i));
      segs.insert(segs.end(), b.items[i].parts.begin(), b.items[i].parts.end());
      segs.insert(segs.end(), b.items.begin() + static_cast<long>(i) + 1, b.items.end());
      out.push_back(Block::dots(std::move(segs)));
    }
  }
  return out;
}

Block merge(const std::vector<Block>& run) {
  std::vector<Factor> segs;
  for (const auto& b : run) {
    if (b.dotted) segs.insert(segs.end(), b.items.begin(), b.items.end());
    else if (b.items.size() == 1) segs.push_back(b.items.front());
    else segs.push_back(Factor::bracket(b.items));
  }
  return Block::dots(std::move(segs));
}

std::vector<Term> term_moves(const Term& t) {
  std::vector<Term> out;
  if (t.is_block) {
    for (auto& b : block_moves(t.block)) out.push_back(Term::of(std::move(b)));
    return out;
  }
  bool all_blocks = true;
  for (const auto& p : t.parts) all_blocks = all_blocks && p.is_block;
  if (all_blocks) {
    std::vector<Block> run;
    for (const auto& p : t.parts) run.push_back(p.block);
    out.push_back(Term::of(merge(run)));
  }
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    if (!t.parts[i].is_block) {
      std::vector<Term> spliced(t.parts.begin(), t.parts.begin() + static_cast<long>(i));
      spliced.insert(spliced.end(), t.parts[i].parts.begin(), t.parts[i].parts.end());
      spliced.insert(spliced.end(), t.parts.begin() + static_cast<long>(i) + 1, t.parts.end());
      out.push_back(Term::product(std::move(spliced)));
    }
    for (auto& m : term_moves(t.parts[i])) {
      auto copy = t.parts;
      copy[i] = std::move(m);
      out.push_back(Term::product(std::move(copy)));
    }
  }
  return out;
}

void flatten(const Term& t, std::vector<Block>& out) {
  if (t.is_block) {
    out.push_back(t.block);
    return;
  }
  for (const auto& p : t.parts) flatten(p, out);
}

}  // namespace

std::vector<Expression> coarsenings(const Expression& e) {
  std::vector<Expression> out;
  for (auto& t : term_moves(e.root)) out.push_back({std::move(t)});
  return out;
}

std::vector<FlatExpression> coarsenings(const FlatExpression& e) {
  std::vector<FlatExpression> out;
  const auto& bs = e.blocks;
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (auto& b : block_moves(bs[i])) {
      auto copy = bs;
      copy[i] = std::move(b);
      out.push_back({std::move(copy)});
    }
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      std::vector<Block> merged(bs.begin(), bs.begin() + static_cast<long>(i));
      merged.push_back(merge(std::vector<Block>(bs.begin() + static_cast<long>(i), bs.begin() + static_cast<long>(j) + 1)));
      merged.insert(merged.end(), bs.begin() + static_cast<long>(j) + 1, bs.end());
      out.push_back({std::move(merged)});
    }
  return out;
}

FlatExpression collapse_codomain(const Expression& e) {
  FlatExpression out;
  flatten(e.root, out.blocks);
  return out;
}

}  // namespace assoc::multiplihedron
