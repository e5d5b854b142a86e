#include "hforge/sequences.hpp"

#include <algorithm>
#include <bit>

namespace hforge {

char symbol_char(Symbol s) {
  switch (s) {
    case Symbol::Minus: return '-';
    case Symbol::Zero:  return '0';
    case Symbol::Plus:  return '+';
    case Symbol::Star:  return '*';
  }
  return '?';
}

Symbol symbol_from_char(char c) {
  switch (c) {
    case '-': return Symbol::Minus;
    case '0': return Symbol::Zero;
    case '+': return Symbol::Plus;
    case '*': return Symbol::Star;
  }
  throw Error(ErrorCode::ParseError, std::string("bad sequence character: ") + c);
}

std::string sequence_string(const Sequence& s) {
  std::string out;
  out.reserve(s.size());
  for (Symbol x : s) out += symbol_char(x);
  return out;
}

Sequence sequence_from_string(const std::string& text) {
  Sequence s;
  s.reserve(text.size());
  for (char c : text) s.push_back(symbol_from_char(c));
  return s;
}

SequenceForm classify(const Sequence& s) {
  const std::size_t n = s.size();
  if (n == 0) return SequenceForm::Invalid;

  auto is_sign = [](Symbol x) { return x == Symbol::Plus || x == Symbol::Minus; };

  // FormA first.
  {
    std::size_t i = 0;
    while (i < n && s[i] == Symbol::Star) ++i;
    if (i < n && s[i] == Symbol::Zero) {
      std::size_t j = i + 1;
      while (j < n && is_sign(s[j])) ++j;
      if (j < n && s[j] == Symbol::Zero) {
        std::size_t t = j + 1;
        while (t < n && s[t] == Symbol::Star) ++t;
        if (t == n) return SequenceForm::FormA;
      }
    }
  }
  // FormB.
  {
    std::size_t i = 0;
    while (i < n && is_sign(s[i])) ++i;
    if (i < n && s[i] == Symbol::Zero) {
      std::size_t j = i + 1;
      while (j < n && s[j] == Symbol::Star) ++j;
      if (j == n) return SequenceForm::FormB;
    }
  }
  return SequenceForm::Invalid;
}

std::vector<Sequence> enumerate_sequences(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "sequence length must be >= 1");
  if (n > 20) throw Error(ErrorCode::InvalidParams, "sequence enumeration capped at length 20");
  std::vector<Sequence> out;

  // FormA: zeros at z1 < z2, signs strictly between, stars elsewhere.
  for (int z1 = 0; z1 < n; ++z1) {
    for (int z2 = z1 + 1; z2 < n; ++z2) {
      int b = z2 - z1 - 1;
      for (std::uint32_t mask = 0; mask < (1u << b); ++mask) {
        Sequence s(static_cast<std::size_t>(n), Symbol::Star);
        s[static_cast<std::size_t>(z1)] = Symbol::Zero;
        s[static_cast<std::size_t>(z2)] = Symbol::Zero;
        for (int i = 0; i < b; ++i) {
          s[static_cast<std::size_t>(z1 + 1 + i)] =
              (mask >> i & 1u) ? Symbol::Plus : Symbol::Minus;
        }
        out.push_back(std::move(s));
      }
    }
  }
  // FormB: signs before the single zero, stars after.
  for (int z = 0; z < n; ++z) {
    for (std::uint32_t mask = 0; mask < (1u << z); ++mask) {
      Sequence s(static_cast<std::size_t>(n), Symbol::Star);
      s[static_cast<std::size_t>(z)] = Symbol::Zero;
      for (int i = 0; i < z; ++i) {
        s[static_cast<std::size_t>(i)] = (mask >> i & 1u) ? Symbol::Plus : Symbol::Minus;
      }
      out.push_back(std::move(s));
    }
  }

  std::sort(out.begin(), out.end());
  return out;
}

long cross_count(const Sequence& a, const Sequence& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "cross_count needs equal lengths");
  }
  long k = 0;
  int prev = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Symbol x = a[i], y = b[i];
    if (x == Symbol::Star || y == Symbol::Star || x == y) continue;
    int s = (static_cast<int>(x) > static_cast<int>(y)) ? 1 : -1;
    if (prev != 0 && s != prev) ++k;
    prev = s;
  }
  return k;
}

namespace {

// Fixed-capacity bitset sized at runtime; 64-bit blocks.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i >> 6] |= (1ULL << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto b : w_) c += static_cast<std::size_t>(std::popcount(b));
    return c;
  }

  bool any() const {
    for (auto b : w_) if (b) return true;
    return false;
  }

  void and_assign(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  }

  template <typename F>
  void for_each(F&& f) const {  // ascending index order
    for (std::size_t blk = 0; blk < w_.size(); ++blk) {
      std::uint64_t b = w_[blk];
      while (b) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(b));
        f(blk * 64 + bit);
        b &= b - 1;
      }
    }
  }

  std::size_t universe() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Exact maximum clique by branch and bound with greedy colouring bounds.
// Deterministic: vertices are scanned in index order throughout, so the
// result is reproducible run to run.
struct CliqueSearch {
  const std::vector<Bits>& adj;
  unsigned long long budget;
  unsigned long long nodes = 0;
  bool exhausted = false;
  std::vector<std::size_t> best;

  CliqueSearch(const std::vector<Bits>& a, unsigned long long b) : adj(a), budget(b) {}

  bool consume() {
    if (exhausted) return false;
    if (++nodes > budget) { exhausted = true; return false; }
    return true;
  }

  // Greedy colouring of P in index order; on return order[i] lists P
  // ascending by colour and colours[i] is 1-based.
  void colour_sort(const Bits& P, std::vector<std::size_t>& order, std::vector<int>& colours) const {
    order.clear();
    colours.clear();
    std::vector<std::vector<std::size_t>> classes;
    P.for_each([&](std::size_t v) {
      for (std::size_t c = 0;; ++c) {
        if (c == classes.size()) classes.emplace_back();
        bool clash = false;
        for (std::size_t u : classes[c]) {
          if (adj[v].test(u)) { clash = true; break; }
        }
        if (!clash) { classes[c].push_back(v); break; }
      }
    });
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (std::size_t v : classes[c]) {
        order.push_back(v);
        colours.push_back(static_cast<int>(c) + 1);
      }
    }
  }

  void expand(std::vector<std::size_t>& R, Bits P) {
    if (!consume()) return;
    std::vector<std::size_t> order;
    std::vector<int> colours;
    colour_sort(P, order, colours);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (exhausted) return;
      if (R.size() + static_cast<std::size_t>(colours[idx]) <= best.size()) return;
      std::size_t v = order[idx];
      R.push_back(v);
      if (R.size() > best.size()) best = R;
      Bits P2 = P;
      P2.and_assign(adj[v]);
      if (P2.any()) expand(R, std::move(P2));
      R.pop_back();
      P.reset(v);
    }
  }

  // Does P contain a clique of the given size?
  bool exists(Bits P, std::size_t need) {
    if (need == 0) return true;
    if (!consume()) return false;
    if (P.count() < need) return false;
    std::vector<std::size_t> order;
    std::vector<int> colours;
    colour_sort(P, order, colours);
    if (colours.empty() || static_cast<std::size_t>(colours.back()) < need) return false;
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (exhausted) return false;
      if (static_cast<std::size_t>(colours[idx]) < need) return false;
      std::size_t v = order[idx];
      Bits P2 = P;
      P2.and_assign(adj[v]);
      if (exists(std::move(P2), need - 1)) return true;
      P.reset(v);
    }
    return false;
  }
};

}  // namespace

FamilyResult max_family(int n, int k, unsigned long long node_budget) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "family length must be >= 1");
  if (k < -1) throw Error(ErrorCode::InvalidParams, "crossing cap must be >= -1");
  if (node_budget == 0) node_budget = kDefaultNodeBudget;

  std::vector<Sequence> seqs = enumerate_sequences(n);
  FamilyResult res;
  res.n = n;
  res.k = k;
  res.k_effective = (k < 0) ? -1 : std::min(k, n - 1);
  res.budget = node_budget;

  if (k == -1) {
    res.size = 1;
    res.witness = {seqs.front()};
    return res;
  }

  const std::size_t N = seqs.size();
  std::vector<Bits> adj(N, Bits(N));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      if (cross_count(seqs[i], seqs[j]) <= res.k_effective) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }

  CliqueSearch search(adj, node_budget);
  Bits all(N);
  for (std::size_t i = 0; i < N; ++i) all.set(i);
  std::vector<std::size_t> R;
  search.expand(R, all);

  std::vector<std::size_t> chosen = search.best;
  if (!search.exhausted) {
    // Refine to the lexicographically least maximum family: grow a prefix,
    // keeping each candidate vertex only if the optimum stays reachable.
    const std::size_t S = search.best.size();
    std::vector<std::size_t> prefix;
    Bits P = all;
    for (std::size_t v = 0; v < N && prefix.size() < S; ++v) {
      if (!P.test(v)) continue;
      Bits P2 = P;
      P2.and_assign(adj[v]);
      Bits probe = P2;
      if (search.exists(std::move(probe), S - prefix.size() - 1)) {
        prefix.push_back(v);
        P = std::move(P2);
      } else {
        P.reset(v);
      }
      if (search.exhausted) break;
    }
    if (!search.exhausted) chosen = prefix;
  }

  res.size = chosen.size();
  res.exact = !search.exhausted;
  res.nodes = search.nodes;
  res.witness.reserve(chosen.size());
  for (std::size_t v : chosen) res.witness.push_back(seqs[v]);
  return res;
}

std::vector<RecurrenceViolation> check_recurrence(
    const std::map<std::pair<int, int>, std::size_t>& table) {
  std::vector<RecurrenceViolation> out;
  for (const auto& [key, value] : table) {
    const auto [n, k] = key;
    if (n < 2 || k < 0) continue;
    auto prev_same = table.find({n - 1, k});
    if (prev_same == table.end()) {
      throw Error(ErrorCode::MissingEntry,
                  "recurrence needs entry (" + std::to_string(n - 1) + ", " + std::to_string(k) + ")");
    }
    std::size_t prev_lower;
    if (k - 1 == -1) {
      auto it = table.find({n - 1, -1});
      prev_lower = (it == table.end()) ? 1 : it->second;
    } else {
      auto it = table.find({n - 1, k - 1});
      if (it == table.end()) {
        throw Error(ErrorCode::MissingEntry,
                    "recurrence needs entry (" + std::to_string(n - 1) + ", " + std::to_string(k - 1) + ")");
      }
      prev_lower = it->second;
    }
    std::size_t bound = prev_same->second + 2 * prev_lower + 2;
    if (value > bound) out.push_back({n, k, value, bound});
  }
  return out;
}

}  // namespace hforge
