#ifndef NONREP_SASEQ_HPP
#define NONREP_SASEQ_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace nonrep {

enum class LineKind { path, cycle };

/// Word over {S, A}: letter i records whether the corresponding vertex of a
/// properly 3-colored path or cycle is Symmetrical (both neighbors share a
/// color) or Asymmetrical.
class SAWord {
public:
  SAWord() = default;
  explicit SAWord(std::string letters) : letters_(std::move(letters)) {
    for (char ch : letters_)
      if (ch != 'S' && ch != 'A')
        throw std::invalid_argument(std::string("SA word: invalid letter '") + ch + "'");
  }

  const std::string& str() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const SAWord&, const SAWord&) = default;
  friend auto operator<=>(const SAWord&, const SAWord&) = default;

private:
  std::string letters_;
};

inline constexpr std::array<std::string_view, 5> forbidden_words{"SS", "AAAA", "ASASA", "AASAASAA", "AAASAAASAAA"};

// Longest word avoiding every forbidden word; re-derived by enumerate_h_free in tests.
inline constexpr std::string_view longest_h_free_word = "SASAASAAASAAASAASAS";

inline bool is_forbidden(std::string_view w) {
  return std::find(forbidden_words.begin(), forbidden_words.end(), w) != forbidden_words.end();
}

/// SA word of a proper 3-coloring of the naturally labeled P_n (letters for
/// vertices 1..n-2) or C_n (letters for all n vertices).
inline SAWord encode_sa(LineKind kind, const Coloring& c) {
  const std::size_t n = c.size();
  if (c.k() > 3) throw std::invalid_argument("encode_sa: needs a 3-coloring (k = " + std::to_string(c.k()) + ")");
  if (kind == LineKind::cycle && n < 3) throw std::invalid_argument("encode_sa: cycle needs n >= 3");
  auto at = [&](std::size_t i) { return c[static_cast<Vertex>(i % n)]; };
  const std::size_t edges = kind == LineKind::path ? (n == 0 ? 0 : n - 1) : n;
  for (std::size_t i = 0; i < edges; ++i)
    if (at(i) == at(i + 1)) throw std::invalid_argument("encode_sa: coloring is not proper");
  std::string letters;
  if (kind == LineKind::path) {
    for (std::size_t i = 1; i + 1 < n; ++i) letters.push_back(at(i - 1) == at(i + 1) ? 'S' : 'A');
  } else {
    for (std::size_t i = 0; i < n; ++i) letters.push_back(at(i + n - 1) == at(i + 1) ? 'S' : 'A');
  }
  return SAWord(std::move(letters));
}

inline SAWord encode_sa(const Graph& g, const Coloring& c) {
  require_colors(g, c);
  switch (g.topology()) {
  case Topology::path: return encode_sa(LineKind::path, c);
  case Topology::cycle: return encode_sa(LineKind::cycle, c);
  case Topology::general: break;
  }
  throw std::invalid_argument("encode_sa: graph must be a naturally labeled path or cycle");
}

/// The unique proper 3-coloring with c(v_0) = 1, c(v_1) = 2 realizing `w`.
/// S repeats the color two back, A takes the third color. For cycles the
/// closure (properness across v_{n-1}v_0 and letters a_0, a_{n-1}) is checked.
inline Coloring decode_sa(const SAWord& w, LineKind kind) {
  const std::size_t n = kind == LineKind::path ? w.size() + 2 : w.size();
  if (kind == LineKind::cycle && n < 3) throw std::invalid_argument("decode_sa: cycle needs at least 3 letters");
  // letter index for vertex i: path a_1..a_{n-2} stored at 0..n-3
  auto letter = [&](std::size_t vertex) { return kind == LineKind::path ? w[vertex - 1] : w[vertex]; };
  std::vector<Color> colors(n);
  colors[0] = 1;
  colors[1] = 2;
  for (std::size_t i = 1; i + 1 < n; ++i)
    colors[i + 1] = letter(i) == 'S' ? colors[i - 1] : 6 - colors[i - 1] - colors[i];
  if (kind == LineKind::cycle) {
    const auto s = [](bool sym) { return sym ? 'S' : 'A'; };
    if (colors[n - 1] == colors[0])
      throw inconsistent_word("decode_sa: closing edge v" + std::to_string(n - 1) + "v0 has both ends colored " +
                              std::to_string(colors[0]));
    if (s(colors[n - 2] == colors[0]) != letter(n - 1) || s(colors[n - 1] == colors[1]) != letter(0))
      throw inconsistent_word("decode_sa: wrap-around letters disagree with decoded colors");
  }
  return Coloring(std::move(colors), 3);
}

struct HMatch {
  std::size_t position = 0;
  std::string_view word;

  friend bool operator==(const HMatch&, const HMatch&) = default;
};

/// Leftmost occurrence of a forbidden word as a contiguous factor.
/// In cyclic mode every rotation is examined (factors of length <= |w| that
/// may wrap around); `position` is the start index in `w`.
inline std::optional<HMatch> is_h_free(const SAWord& w, bool cyclic = false) {
  const std::string& s = w.str();
  const std::string text = cyclic ? s + s : s;
  for (std::size_t pos = 0; pos < s.size(); ++pos)
    for (std::string_view h : forbidden_words) {
      if (h.size() > s.size()) continue;
      if (text.compare(pos, h.size(), h) == 0) return HMatch{pos, h};
    }
  return std::nullopt;
}

struct HFreeEnumeration {
  std::vector<SAWord> words;                 // every nonempty H-free word, by length then lexicographically
  std::vector<std::size_t> count_by_length;  // index L holds the number of words of length L
  std::size_t max_length = 0;
  std::vector<SAWord> maximal_words;         // all words of length max_length
  bool capped = false;                       // some word of length max_len could still be extended
};

/// Every H-free word of length 1..max_len. The language is finite so the
/// search stops by itself; max_len only caps it.
inline HFreeEnumeration enumerate_h_free(std::size_t max_len) {
  if (max_len < 1) throw std::invalid_argument("enumerate_h_free: maxLen must be >= 1");
  HFreeEnumeration out;
  out.count_by_length.assign(max_len + 1, 0);
  // words grow one letter at a time; only suffixes can become forbidden
  auto suffix_ok = [](const std::string& s) {
    for (std::string_view h : forbidden_words)
      if (s.size() >= h.size() && s.compare(s.size() - h.size(), h.size(), h) == 0) return false;
    return true;
  };
  std::vector<std::string> level{""};
  for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
    std::vector<std::string> next;
    for (const auto& prefix : level)
      for (char ch : {'A', 'S'}) {
        std::string s = prefix + ch;
        if (suffix_ok(s)) next.push_back(std::move(s));
      }
    std::sort(next.begin(), next.end());
    out.count_by_length[len] = next.size();
    for (const auto& s : next) out.words.emplace_back(s);
    if (!next.empty()) out.max_length = len;
    level = std::move(next);
  }
  if (!level.empty() && out.max_length == max_len) {
    for (const auto& prefix : level)
      for (char ch : {'A', 'S'})
        if (suffix_ok(prefix + ch)) out.capped = true;
  }
  for (const auto& w : out.words)
    if (w.size() == out.max_length) out.maximal_words.push_back(w);
  return out;
}

/// Explicit repetitive stroll for a forbidden word h: the coloring of the
/// path whose SA interior is h (decoded with c(v_0)=1, c(v_1)=2), the stroll,
/// and the color sequence it induces.
struct HWitness {
  std::string_view word;
  std::size_t path_length = 0;
  Coloring coloring;
  Walk stroll;
  std::vector<Color> sequence;
};

inline HWitness h_witness_stroll(std::string_view h) {
  static const std::map<std::string_view, std::vector<Vertex>> strolls{
      {"SS", {0, 1, 2, 3}},
      {"AAAA", {0, 1, 2, 3, 4, 5}},
      {"ASASA", {0, 1, 2, 3, 4, 5, 6, 5}},
      {"AASAASAA", {1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 8}},
      {"AAASAAASAAA", {2, 1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 11}},
  };
  auto it = strolls.find(h);
  if (it == strolls.end()) throw std::invalid_argument("h_witness_stroll: '" + std::string(h) + "' is not forbidden");
  HWitness out;
  out.word = it->first;
  out.coloring = decode_sa(SAWord(std::string(h)), LineKind::path);
  out.path_length = out.coloring.size();
  out.stroll = Walk{it->second};
  out.sequence = colors_of(out.coloring, out.stroll);
  return out;
}

} // namespace nonrep

#endif // NONREP_SASEQ_HPP
