#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hforge/errors.hpp"

namespace hforge {

// Enumerator values double as lexicographic ranks: '-' < '0' < '+' < '*'.
enum class Symbol : unsigned char { Minus = 0, Zero = 1, Plus = 2, Star = 3 };

char symbol_char(Symbol s);
Symbol symbol_from_char(char c);  // ParseError

using Sequence = std::vector<Symbol>;

std::string sequence_string(const Sequence& s);
Sequence sequence_from_string(const std::string& text);  // ParseError on bad chars

// FormA: *^a 0 (+|-)^b 0 *^c   (exactly two zeros)
// FormB: (+|-)^a 0 *^b         (exactly one zero)
// The zero counts differ, so the forms cannot overlap; FormA is tested first.
enum class SequenceForm { Invalid, FormA, FormB };

SequenceForm classify(const Sequence& s);
inline bool is_valid_sequence(const Sequence& s) { return classify(s) != SequenceForm::Invalid; }

// All valid sequences of length n in lexicographic order. n must stay at
// desk scale; the count grows like 2^n.
std::vector<Sequence> enumerate_sequences(int n);  // InvalidParams

// Minimum crossings forced by the pair: the number of alternations in the
// stream of strict comparisons taken at indices where both entries are
// comparable (neither is '*') and differ. Throws LengthMismatch.
long cross_count(const Sequence& a, const Sequence& b);

inline constexpr unsigned long long kDefaultNodeBudget = 100000000ULL;

struct FamilyResult {
  int n = 0;
  int k = 0;            // as requested
  int k_effective = 0;  // clamped to n-1 (crossings never exceed that)
  std::size_t size = 0;
  std::vector<Sequence> witness;  // lexicographically least maximum family
  bool exact = true;              // false: node budget hit, size is a lower bound
  unsigned long long nodes = 0;
  unsigned long long budget = 0;
};

// Largest family of pairwise-valid sequences of length n whose members cross
// pairwise at most k times, found by exact branch-and-bound over the
// compatibility graph. k == -1 asks for pairwise "fewer than zero" crossings,
// which only a single sequence satisfies vacuously.
FamilyResult max_family(int n, int k, unsigned long long node_budget = kDefaultNodeBudget);

struct RecurrenceViolation {
  int n = 0;  // the larger row: entry (n, k) against row n-1
  int k = 0;
  std::size_t value = 0;
  std::size_t bound = 0;
};

// Checks every entry (n, k) with n >= 2 of a family-size table against
// f(n, k) <= f(n-1, k) + 2 f(n-1, k-1) + 2. Entries at k-1 == -1 default
// to 1 when absent; any other missing dependency throws MissingEntry.
std::vector<RecurrenceViolation> check_recurrence(
    const std::map<std::pair<int, int>, std::size_t>& table);

}  // namespace hforge
