#include "epimorph/palindrome.hpp"

#include <algorithm>

#include "epimorph/error.hpp"

namespace epimorph {

namespace {

void require_binary(Antimorphism kind, const Alphabet& alphabet) {
  if (kind != Antimorphism::R && alphabet.size() != 2) {
    throw Error(ErrorKind::alphabet_mismatch,
                std::string(to_string(kind)) + " is defined over a binary alphabet only");
  }
}

bool psi_fixed(Antimorphism kind, std::span<const Letter> w) {
  const std::size_t n = w.size();
  switch (kind) {
    case Antimorphism::R:
      return is_palindrome(w);
    case Antimorphism::E:
      if (n % 2) return false;
      for (std::size_t i = 0; i < n / 2; ++i) {
        if (w[i] == w[n - 1 - i]) return false;
      }
      return true;
    case Antimorphism::RE:
      return n == 0;
  }
  return false;
}

}  // namespace

std::string_view to_string(Antimorphism kind) {
  switch (kind) {
    case Antimorphism::R: return "R";
    case Antimorphism::E: return "E";
    case Antimorphism::RE: return "RE";
  }
  return "?";
}

Word apply_antimorphism(Antimorphism kind, const Word& w) {
  require_binary(kind, w.alphabet());
  std::vector<Letter> out(w.begin(), w.end());
  if (kind != Antimorphism::RE) std::reverse(out.begin(), out.end());
  if (kind != Antimorphism::R) {
    for (auto& a : out) a = static_cast<Letter>(1 - a);
  }
  return Word(std::move(out), w.alphabet());
}

bool is_psi_palindrome(Antimorphism kind, const Word& w) {
  require_binary(kind, w.alphabet());
  return psi_fixed(kind, w.letters());
}

Word longest_palindromic_suffix(const Word& w) {
  if (w.empty()) {
    throw Error(ErrorKind::invalid_argument, "longest palindromic suffix of the empty word");
  }
  // Border of R(w) # w: a suffix of w equal to a prefix of R(w) is a palindrome.
  const std::size_t n = w.size();
  std::vector<int> s;
  s.reserve(2 * n + 1);
  for (std::size_t i = n; i-- > 0;) s.push_back(w[i]);
  s.push_back(-1);
  for (Letter a : w) s.push_back(a);
  std::vector<std::size_t> pi(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && s[i] != s[k]) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  return w.suffix(pi.back());
}

Word palindromic_closure(const Word& w) {
  if (w.empty()) return w;
  const std::size_t keep = w.size() - longest_palindromic_suffix(w).size();
  return w + w.prefix(keep).reversed();
}

PalindromeCounter::PalindromeCounter(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {
  nodes_.push_back({-1, 0});
  nodes_.push_back({0, 0});
  edges_.assign(2 * alphabet_size_, 0);
}

std::uint32_t PalindromeCounter::fit(std::uint32_t node, Letter a) const {
  const auto i = static_cast<std::int64_t>(text_.size()) - 1;
  while (true) {
    const std::int64_t j = i - 1 - nodes_[node].len;
    if (j >= 0 && text_[static_cast<std::size_t>(j)] == a) return node;
    node = nodes_[node].link;
  }
}

bool PalindromeCounter::push(Letter a) {
  if (a >= alphabet_size_) {
    throw Error(ErrorKind::alphabet_mismatch, "letter outside palindrome counter alphabet");
  }
  text_.push_back(a);
  const std::uint32_t parent = fit(last_, a);
  if (std::uint32_t existing = child(parent, a)) {
    last_ = existing;
    return false;
  }
  const std::int64_t len = nodes_[parent].len + 2;
  const std::uint32_t link = len == 1 ? 1u : child(fit(nodes_[parent].link, a), a);
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({len, link});
  edges_.resize(edges_.size() + alphabet_size_, 0);
  edges_[std::size_t{parent} * alphabet_size_ + a] = id;
  last_ = id;
  return true;
}

std::size_t PalindromeCounter::longest_suffix_length() const noexcept {
  return static_cast<std::size_t>(nodes_[last_].len);
}

std::vector<std::size_t> PalindromeCounter::per_length() const {
  std::vector<std::size_t> hist(1, 0);
  for (std::size_t i = 2; i < nodes_.size(); ++i) {
    const auto len = static_cast<std::size_t>(nodes_[i].len);
    if (hist.size() <= len) hist.resize(len + 1, 0);
    ++hist[len];
  }
  return hist;
}

PalindromeCensus census(const Word& w) {
  PalindromeCounter counter(w.alphabet().size());
  for (Letter a : w) counter.push(a);
  PalindromeCensus c;
  c.word = w;
  c.distinct_palindromes = counter.distinct();
  c.defect = counter.defect();
  c.per_length_counts = counter.per_length();
  c.per_length_counts[0] = 1;
  return c;
}

std::vector<DefectPoint> defect_profile(PrefixSource& src, std::span<const std::size_t> checkpoints) {
  for (std::size_t i = 1; i < checkpoints.size(); ++i) {
    if (checkpoints[i] <= checkpoints[i - 1]) {
      throw Error(ErrorKind::invalid_argument, "checkpoints must be strictly increasing");
    }
  }
  std::vector<DefectPoint> out;
  if (checkpoints.empty()) return out;
  const auto letters = src.view(checkpoints.back());
  PalindromeCounter counter(src.alphabet().size());
  std::size_t next = 0;
  for (std::size_t i = 0; i <= letters.size() && next < checkpoints.size(); ++i) {
    while (next < checkpoints.size() && checkpoints[next] == i) {
      out.push_back({i, counter.defect()});
      ++next;
    }
    if (i < letters.size()) counter.push(letters[i]);
  }
  return out;
}

std::size_t psi_palindromic_complexity(const FactorIndex& index, std::size_t n, Antimorphism kind) {
  require_binary(kind, index.source().alphabet());
  std::size_t count = 0;
  index.for_each_factor(n, [&](std::span<const Letter> f, std::span<const std::uint32_t>) {
    if (psi_fixed(kind, f)) ++count;
  });
  return count;
}

std::size_t palindromes_centered(const FactorIndex& index, std::optional<Letter> center,
                                 std::size_t max_len) {
  if (max_len > index.max_len()) {
    throw Error(ErrorKind::invalid_argument, "maxLen exceeds indexed depth");
  }
  std::size_t count = 0;
  for (std::size_t n = center ? 1 : 0; n <= max_len; n += 2) {
    index.for_each_factor(n, [&](std::span<const Letter> f, std::span<const std::uint32_t>) {
      if (is_palindrome(f) && (!center || f[n / 2] == *center)) ++count;
    });
  }
  return count;
}

PalindromeRadii::PalindromeRadii(std::span<const Letter> text)
    : odd_(text.size(), 0), even_(text.size() + 1, 0) {
  const auto n = static_cast<std::int64_t>(text.size());
  for (std::int64_t i = 0, l = 0, r = -1; i < n; ++i) {
    std::int64_t k = i > r ? 1 : std::min<std::int64_t>(static_cast<std::int64_t>(odd_[l + r - i]) + 1, r - i + 1);
    while (i - k >= 0 && i + k < n && text[i - k] == text[i + k]) ++k;
    odd_[i] = static_cast<std::size_t>(k - 1);
    if (i + k - 1 > r) {
      l = i - k + 1;
      r = i + k - 1;
    }
  }
  for (std::int64_t i = 0, l = 0, r = -1; i < n; ++i) {
    std::int64_t k = i > r ? 0 : std::min<std::int64_t>(static_cast<std::int64_t>(even_[l + r - i + 1]), r - i + 1);
    while (i - k - 1 >= 0 && i + k < n && text[i - k - 1] == text[i + k]) ++k;
    even_[i] = static_cast<std::size_t>(k);
    if (i + k - 1 > r) {
      l = i - k;
      r = i + k - 1;
    }
  }
}

bool PalindromeRadii::is_palindrome(std::size_t pos, std::size_t len) const noexcept {
  if (len <= 1) return true;
  const std::size_t half = len / 2;
  if (len % 2) return odd_[pos + half] >= half;
  return even_[pos + half] >= half;
}

}  // namespace epimorph
