#include "epimorph/factor_index.hpp"

#include <algorithm>
#include <set>

#include "epimorph/error.hpp"

namespace epimorph {

namespace {

std::string key_of(std::span<const Letter> f) {
  return std::string(reinterpret_cast<const char*>(f.data()), f.size());
}

}  // namespace

bool ExtensionReport::touches_boundary() const {
  std::set<Letter> inner_left, inner_right;
  for (auto [x, y] : both_sided) {
    inner_left.insert(x);
    inner_right.insert(y);
  }
  return inner_left.size() != left.size() || inner_right.size() != right.size();
}

std::string_view to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::ordinary: return "ordinary";
    case FactorKind::left_special: return "leftSpecial";
    case FactorKind::right_special: return "rightSpecial";
    case FactorKind::bispecial: return "bispecial";
  }
  return "unknown";
}

FactorIndex::FactorIndex(Word source, std::size_t max_len) : source_(std::move(source)) {
  const std::size_t n = source_.size();
  if (max_len > n) {
    throw Error(ErrorKind::invalid_argument, "index depth exceeds source length");
  }
  if (n >= UINT32_MAX) {
    throw Error(ErrorKind::invalid_argument, "source too long to index");
  }
  levels_.resize(max_len + 1);

  auto& empty = levels_[0];
  empty.ids.emplace(std::string(), 0);
  empty.occurrences.emplace_back(n + 1);
  for (std::size_t i = 0; i <= n; ++i) empty.occurrences[0][i] = static_cast<std::uint32_t>(i);

  // Class of the factor of length len starting at i, refined letter by letter.
  std::vector<std::uint32_t> cls(n, 0);
  const auto letters = source_.letters();
  std::unordered_map<std::uint64_t, std::uint32_t> refine;
  for (std::size_t len = 1; len <= max_len; ++len) {
    auto& lvl = levels_[len];
    refine.clear();
    const std::size_t count = n - len + 1;
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t key = (std::uint64_t{cls[i]} << 8) | letters[i + len - 1];
      auto [it, inserted] = refine.try_emplace(key, static_cast<std::uint32_t>(lvl.occurrences.size()));
      if (inserted) {
        lvl.occurrences.emplace_back();
        lvl.ids.emplace(key_of(letters.subspan(i, len)), it->second);
      }
      lvl.occurrences[it->second].push_back(static_cast<std::uint32_t>(i));
      cls[i] = it->second;
    }
    cls.resize(count);
  }
}

const FactorIndex::Level& FactorIndex::level(std::size_t n) const {
  if (n > max_len()) {
    throw Error(ErrorKind::invalid_argument,
                "length " + std::to_string(n) + " exceeds indexed depth " + std::to_string(max_len()));
  }
  return levels_[n];
}

std::span<const std::uint32_t> FactorIndex::find(std::span<const Letter> f) const {
  const auto& lvl = level(f.size());
  auto it = lvl.ids.find(key_of(f));
  if (it == lvl.ids.end()) return {};
  return lvl.occurrences[it->second];
}

bool FactorIndex::contains(std::span<const Letter> f) const { return !find(f).empty(); }

std::span<const std::uint32_t> FactorIndex::occurrences(const Word& f) const {
  auto occ = find(f.letters());
  if (occ.empty()) {
    throw Error(ErrorKind::not_in_language, "'" + f.str() + "' is not a factor of the source");
  }
  return occ;
}

std::size_t FactorIndex::complexity(std::size_t n) const { return level(n).occurrences.size(); }

std::vector<Word> FactorIndex::factors(std::size_t n) const {
  std::vector<Word> out;
  for_each_factor(n, [&](std::span<const Letter> f, std::span<const std::uint32_t>) {
    out.emplace_back(std::vector<Letter>(f.begin(), f.end()), source_.alphabet());
  });
  std::sort(out.begin(), out.end());
  return out;
}

void FactorIndex::for_each_factor(
    std::size_t n,
    const std::function<void(std::span<const Letter>, std::span<const std::uint32_t>)>& visit) const {
  const auto& lvl = level(n);
  const auto letters = source_.letters();
  for (const auto& occ : lvl.occurrences) visit(letters.subspan(occ.front(), n), occ);
}

ExtensionReport FactorIndex::extensions(const Word& f) const {
  ExtensionReport rep;
  rep.factor = f;
  const auto occ = occurrences(f);
  const auto letters = source_.letters();
  const std::size_t n = letters.size();
  const std::size_t len = f.size();
  std::set<Letter> left, right;
  std::set<LetterPair> both;
  for (std::uint32_t i : occ) {
    const bool has_left = i > 0;
    const bool has_right = i + len < n;
    if (has_left) left.insert(letters[i - 1]);
    if (has_right) right.insert(letters[i + len]);
    if (has_left && has_right) {
      both.emplace(letters[i - 1], letters[i + len]);
      ++rep.interior_occurrences;
    }
  }
  rep.occurrences = occ.size();
  rep.left.assign(left.begin(), left.end());
  rep.right.assign(right.begin(), right.end());
  rep.both_sided.assign(both.begin(), both.end());
  return rep;
}

FactorIndex build_index(const Word& w, std::size_t max_len) { return FactorIndex(w, max_len); }

ExtensionReport extensions(const FactorIndex& index, const Word& f) { return index.extensions(f); }

FactorKind classify_factor(const FactorIndex& index, const Word& f) {
  const auto rep = index.extensions(f);
  const bool ls = rep.left.size() >= 2;
  const bool rs = rep.right.size() >= 2;
  if (ls && rs) return FactorKind::bispecial;
  if (ls) return FactorKind::left_special;
  if (rs) return FactorKind::right_special;
  return FactorKind::ordinary;
}

long bilateral_order(const FactorIndex& index, const Word& f) {
  const auto rep = index.extensions(f);
  if (rep.both_sided.empty()) {
    throw Error(ErrorKind::insufficient_context,
                "no both-sided extension of '" + f.str() + "' observed");
  }
  return static_cast<long>(rep.both_sided.size()) - static_cast<long>(rep.right.size()) -
         static_cast<long>(rep.left.size()) + 1;
}

std::size_t factor_complexity(const FactorIndex& index, std::size_t n) { return index.complexity(n); }

std::vector<Word> enumerate_bispecial(const FactorIndex& index, std::size_t max_len) {
  if (max_len > index.max_len()) {
    throw Error(ErrorKind::invalid_argument, "maxLen exceeds indexed depth");
  }
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_len; ++n) {
    for (auto& f : index.factors(n)) {
      if (classify_factor(index, f) == FactorKind::bispecial) out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace epimorph
