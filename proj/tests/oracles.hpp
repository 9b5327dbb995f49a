#pragma once

// Brute-force reference implementations over plain strings. Nothing here
// calls into the library.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline bool is_pal(const std::string& s) { return std::equal(s.begin(), s.end(), s.rbegin()); }

inline std::string rev(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

/// Letter exchange 0 <-> 1.
inline std::string swap01(std::string s) {
  for (auto& c : s) c = c == '0' ? '1' : '0';
  return s;
}

inline std::set<std::string> factors(const std::string& w, std::size_t n) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

inline std::set<std::string> all_factors(const std::string& w) {
  std::set<std::string> out{""};
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j <= w.size(); ++j) out.insert(w.substr(i, j - i));
  return out;
}

inline std::size_t distinct_palindromes(const std::string& w) {
  std::size_t n = 0;
  for (const auto& f : all_factors(w)) n += is_pal(f);
  return n;
}

inline std::size_t defect(const std::string& w) { return w.size() + 1 - distinct_palindromes(w); }

inline std::vector<std::size_t> occurrences(const std::string& w, const std::string& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + f.size() <= w.size(); ++i)
    if (w.compare(i, f.size(), f) == 0) out.push_back(i);
  return out;
}

/// Shortest palindrome with w as a prefix, by trying every length.
inline std::string closure(const std::string& w) {
  for (std::size_t extra = 0;; ++extra) {
    std::string cand = w + rev(w.substr(0, extra));
    if (is_pal(cand)) return cand;
  }
}

/// Prefix of length n of the standard episturmian word for `directive`
/// (letters of `pre` then `per` repeated), by literal iterated closure.
inline std::string standard(const std::string& pre, const std::string& per, std::size_t n,
                            const std::string& seed = "") {
  std::string w = seed;
  for (std::size_t i = 0; w.size() < n; ++i) {
    const char x = i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()];
    w = closure(w + x);
  }
  return w.substr(0, n);
}

inline std::string substitute(const std::vector<std::string>& images, const std::string& w) {
  std::string out;
  for (char c : w) out += images[static_cast<std::size_t>(c - '0')];
  return out;
}

/// Iterates the morphism from `start` until the word has n letters.
inline std::string fixed_point(const std::vector<std::string>& images, char start, std::size_t n) {
  std::string w(1, start);
  while (w.size() < n) w = substitute(images, w);
  return w.substr(0, n);
}

/// Return words of f in w, by first occurrence.
inline std::vector<std::string> return_words(const std::string& w, const std::string& f) {
  const auto occ = occurrences(w, f);
  std::vector<std::string> out;
  for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
    auto r = w.substr(occ[i], occ[i + 1] - occ[i]);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

/// b(f) from the observed extensions of f in w.
inline long bilateral_order(const std::string& w, const std::string& f) {
  std::set<char> left, right;
  std::set<std::pair<char, char>> both;
  for (std::size_t p : occurrences(w, f)) {
    if (p > 0) left.insert(w[p - 1]);
    if (p + f.size() < w.size()) right.insert(w[p + f.size()]);
    if (p > 0 && p + f.size() < w.size()) both.emplace(w[p - 1], w[p + f.size()]);
  }
  return static_cast<long>(both.size()) - static_cast<long>(left.size()) - static_cast<long>(right.size()) + 1;
}

/// Every factor of w bordered by two consecutive occurrences of f or R(f)
/// is a palindrome, for every factor f.
inline bool rich_by_crw(const std::string& w) {
  for (const auto& f : all_factors(w)) {
    if (f.empty()) continue;
    auto occ = occurrences(w, f);
    const auto r = occurrences(w, rev(f));
    occ.insert(occ.end(), r.begin(), r.end());
    std::sort(occ.begin(), occ.end());
    occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
    for (std::size_t i = 0; i + 1 < occ.size(); ++i)
      if (!is_pal(w.substr(occ[i], occ[i + 1] + f.size() - occ[i]))) return false;
  }
  return true;
}

/// v_i = (w_{i-1} + w_i) mod 2.
inline std::string s_op(const std::string& w) {
  std::string out;
  for (std::size_t i = 1; i < w.size(); ++i) out += w[i - 1] == w[i] ? '0' : '1';
  return out;
}

inline std::size_t complexity(const std::string& w, std::size_t n) { return factors(w, n).size(); }

/// Psi-palindromes of length n among the factors; psi is "R" or "E".
inline std::size_t psi_palindromes(const std::string& w, std::size_t n, char psi) {
  std::size_t out = 0;
  for (const auto& f : factors(w, n)) out += psi == 'R' ? is_pal(f) : f == rev(swap01(f));
  return out;
}

/// Shortest palindrome r (over the images' letters, |r| <= bound) passing
/// the three P_ret conditions, found by enumerating every candidate word.
inline std::optional<std::string> pret_radius(const std::vector<std::string>& images, std::size_t k,
                                              std::size_t bound) {
  std::set<std::string> distinct(images.begin(), images.end());
  if (distinct.size() != images.size()) return std::nullopt;
  std::vector<std::string> layer{""};
  for (std::size_t len = 0; len <= bound; ++len) {
    for (const auto& r : layer) {
      if (!is_pal(r)) continue;
      const bool ok = std::all_of(images.begin(), images.end(), [&](const std::string& img) {
        const std::string s = img + r;
        return is_pal(s) && occurrences(s, r).size() == 2;
      });
      if (ok) return r;
    }
    std::vector<std::string> next;
    for (const auto& r : layer)
      for (std::size_t a = 0; a < k; ++a) next.push_back(r + static_cast<char>('0' + a));
    layer = std::move(next);
  }
  return std::nullopt;
}

/// All words over {0..k-1} of length n.
inline std::vector<std::string> words(std::size_t k, std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (std::size_t a = 0; a < k; ++a) next.push_back(w + static_cast<char>('0' + a));
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
