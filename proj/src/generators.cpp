#include "epimorph/generators.hpp"

#include <algorithm>

#include "epimorph/error.hpp"
#include "epimorph/palindrome.hpp"

namespace epimorph {

Letter DirectiveSpec::delta(std::size_t i) const {
  if (i == 0) throw Error(ErrorKind::invalid_argument, "directive letters are numbered from 1");
  if (period.empty()) throw Error(ErrorKind::invalid_argument, "empty directive period");
  if (i <= preperiod.size()) return preperiod[i - 1];
  return period[(i - 1 - preperiod.size()) % period.size()];
}

Alphabet DirectiveSpec::alphabet() const {
  if (alphabet_size) return Alphabet(alphabet_size);
  std::size_t top = 1;
  for (const Word* w : {&seed, &preperiod, &period}) {
    for (Letter a : *w) top = std::max<std::size_t>(top, std::size_t{a} + 1);
  }
  return Alphabet(top);
}

void DirectiveSpec::validate() const {
  if (period.empty()) throw Error(ErrorKind::invalid_argument, "directive period must be nonempty");
  const std::size_t k = alphabet().size();
  for (const Word* w : {&seed, &preperiod, &period}) {
    for (Letter a : *w) {
      if (a >= k) throw Error(ErrorKind::invalid_argument, "directive letter outside the alphabet");
    }
  }
}

std::optional<std::size_t> leading_run_bound(const DirectiveSpec& spec) {
  const Letter first = spec.delta(1);
  const std::size_t horizon = spec.preperiod.size() + spec.period.size() + 1;
  for (std::size_t i = 2; i <= horizon; ++i) {
    if (spec.delta(i) != first) return i;
  }
  return std::nullopt;
}

// --- standard episturmian ---------------------------------------------------

StandardEpisturmianSource::StandardEpisturmianSource(DirectiveSpec spec)
    : PrefixSource(spec.alphabet()), spec_(std::move(spec)) {
  spec_.validate();
  buffer_.assign(spec_.seed.begin(), spec_.seed.end());
  lengths_.push_back(buffer_.size());
  last_step_.assign(alphabet().size(), 0);
}

void StandardEpisturmianSource::step() {
  const std::size_t n = lengths_.size();
  const Letter x = spec_.delta(n);
  const std::size_t len = lengths_.back();
  if (spec_.seed.empty()) {
    // closure shortcut: (w_{n-1}x)^R is w_{n-1}·x·w_{n-1} when x is new,
    // otherwise w_{n-1}·(w_{m-1}^-1 w_{n-1}) with m the last step using x.
    const std::size_t skip = last_step_[x] == 0 ? 0 : lengths_[last_step_[x] - 1];
    buffer_.reserve(2 * len + 1);
    if (last_step_[x] == 0) buffer_.push_back(x);
    for (std::size_t i = skip; i < len; ++i) buffer_.push_back(buffer_[i]);
  } else {
    Word current(buffer_, alphabet());
    current += x;
    const Word closed = palindromic_closure(current);
    buffer_.assign(closed.begin(), closed.end());
  }
  lengths_.push_back(buffer_.size());
  last_step_[x] = n;
}

void StandardEpisturmianSource::extend(std::size_t n) {
  while (buffer_.size() < n) step();
}

Word StandardEpisturmianSource::palindromic_prefix(std::size_t n) {
  while (lengths_.size() <= n) step();
  return Word(std::vector<Letter>(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(lengths_[n])),
              alphabet());
}

std::unique_ptr<PrefixSource> StandardEpisturmianSource::clone() const {
  return std::make_unique<StandardEpisturmianSource>(*this);
}

// --- fixed points -----------------------------------------------------------

FixedPointSource::FixedPointSource(Morphism m, Letter start)
    : PrefixSource(m.domain()), morphism_(std::move(m)) {
  if (!morphism_.is_endomorphism()) {
    throw Error(ErrorKind::invalid_argument, "a fixed point needs an endomorphism");
  }
  if (!morphism_.domain().contains(start)) {
    throw Error(ErrorKind::invalid_argument, "start letter outside the alphabet");
  }
  const Word& img = morphism_.image(start);
  if (img.size() < 2 || img[0] != start) {
    throw Error(ErrorKind::invalid_argument, "morphism is not prolongable on the start letter");
  }
  buffer_.assign(img.begin(), img.end());
  expanded_ = 1;
}

void FixedPointSource::extend(std::size_t n) {
  while (buffer_.size() < n) {
    if (expanded_ >= buffer_.size()) {
      throw Error(ErrorKind::invalid_argument, "the fixed point is a finite word");
    }
    const auto img = morphism_.image(buffer_[expanded_++]).letters();
    buffer_.insert(buffer_.end(), img.begin(), img.end());
  }
}

std::unique_ptr<PrefixSource> FixedPointSource::clone() const {
  return std::make_unique<FixedPointSource>(*this);
}

// --- Example 3 --------------------------------------------------------------

namespace {
constexpr Letter kExample3Template[] = {0, 1, 1, 0, 2, 2, 0, 1, 1, 0};
}

Example3Source::Example3Source() : PrefixSource(Alphabet(3)) {}

std::size_t Example3Source::level_length(std::size_t i) {
  std::size_t len = 0;
  for (std::size_t k = 0; k < i; ++k) len = 11 * len + 10;
  return len;
}

void Example3Source::extend(std::size_t n) {
  while (buffer_.size() < n) {
    const std::vector<Letter> previous = buffer_;
    for (Letter c : kExample3Template) {
      buffer_.push_back(c);
      buffer_.insert(buffer_.end(), previous.begin(), previous.end());
    }
    ++levels_;
  }
}

Word Example3Source::level(std::size_t i) {
  const std::size_t len = level_length(i);
  return prefix(len);
}

std::unique_ptr<PrefixSource> Example3Source::clone() const {
  return std::make_unique<Example3Source>(*this);
}

// --- periodic ---------------------------------------------------------------

PeriodicSource::PeriodicSource(Word period) : PrefixSource(period.alphabet()), period_(std::move(period)) {
  if (period_.empty()) throw Error(ErrorKind::invalid_argument, "empty period");
}

void PeriodicSource::extend(std::size_t n) {
  while (buffer_.size() < n) buffer_.insert(buffer_.end(), period_.begin(), period_.end());
}

std::unique_ptr<PrefixSource> PeriodicSource::clone() const {
  return std::make_unique<PeriodicSource>(*this);
}

// --- morphic images ---------------------------------------------------------

ImageSource::ImageSource(Morphism m, std::unique_ptr<PrefixSource> inner)
    : PrefixSource(m.codomain()), morphism_(std::move(m)), inner_(std::move(inner)) {
  if (inner_->alphabet().size() > morphism_.domain().size()) {
    throw Error(ErrorKind::alphabet_mismatch, "source alphabet exceeds the morphism's domain");
  }
  if (morphism_.max_image_length() == 0) {
    throw Error(ErrorKind::invalid_argument, "all-erasing morphism produces no letters");
  }
}

ImageSource::ImageSource(const ImageSource& other)
    : PrefixSource(other),
      morphism_(other.morphism_),
      inner_(other.inner_->clone()),
      consumed_(other.consumed_) {}

void ImageSource::extend(std::size_t n) {
  constexpr std::size_t kStallLimit = std::size_t{1} << 26;
  std::size_t idle = 0;
  while (buffer_.size() < n) {
    const std::size_t chunk = std::max<std::size_t>(64, (n - buffer_.size()) / std::max<std::size_t>(1, morphism_.max_image_length()) + 1);
    const auto letters = inner_->view(consumed_ + chunk);
    const std::size_t before = buffer_.size();
    for (std::size_t i = consumed_; i < letters.size(); ++i) {
      const auto img = morphism_.image(letters[i]).letters();
      buffer_.insert(buffer_.end(), img.begin(), img.end());
    }
    consumed_ = letters.size();
    idle = buffer_.size() == before ? idle + chunk : 0;
    if (idle > kStallLimit) {
      throw Error(ErrorKind::invalid_argument, "morphic image stopped growing");
    }
  }
}

std::unique_ptr<PrefixSource> ImageSource::clone() const { return std::make_unique<ImageSource>(*this); }

SPreimageSource::SPreimageSource(std::unique_ptr<PrefixSource> inner, Letter first)
    : PrefixSource(Alphabet(2)), inner_(std::move(inner)) {
  if (inner_->alphabet().size() != 2) {
    throw Error(ErrorKind::alphabet_mismatch, "S preimages exist for binary words");
  }
  if (first > 1) throw Error(ErrorKind::alphabet_mismatch, "first letter must be 0 or 1");
  buffer_.push_back(first);
}

SPreimageSource::SPreimageSource(const SPreimageSource& other)
    : PrefixSource(other), inner_(other.inner_->clone()) {}

void SPreimageSource::extend(std::size_t n) {
  const auto v = inner_->view(n - 1);
  for (std::size_t i = buffer_.size() - 1; i + 1 < n; ++i) buffer_.push_back(buffer_[i] ^ v[i]);
}

std::unique_ptr<PrefixSource> SPreimageSource::clone() const {
  return std::make_unique<SPreimageSource>(*this);
}

// --- factories --------------------------------------------------------------

std::unique_ptr<PrefixSource> standard_episturmian(const DirectiveSpec& spec) {
  return std::make_unique<StandardEpisturmianSource>(spec);
}

std::unique_ptr<PrefixSource> fixed_point(const Morphism& m, Letter a) {
  return std::make_unique<FixedPointSource>(m, a);
}

std::unique_ptr<PrefixSource> example3_word() { return std::make_unique<Example3Source>(); }

std::unique_ptr<PrefixSource> periodic_source(const Word& p) { return std::make_unique<PeriodicSource>(p); }

std::unique_ptr<PrefixSource> image_source(const Morphism& m, std::unique_ptr<PrefixSource> src) {
  return std::make_unique<ImageSource>(m, std::move(src));
}

std::unique_ptr<PrefixSource> s_preimage_source(std::unique_ptr<PrefixSource> src, Letter first) {
  return std::make_unique<SPreimageSource>(std::move(src), first);
}

std::optional<Letter> separating_letter(const FactorIndex& index) {
  if (index.max_len() < 2) {
    throw Error(ErrorKind::invalid_argument, "separating letter needs index depth >= 2");
  }
  const auto pairs = index.factors(2);
  for (std::size_t a = 0; a < index.source().alphabet().size(); ++a) {
    const bool everywhere = std::all_of(pairs.begin(), pairs.end(), [&](const Word& f) {
      return f[0] == a || f[1] == a;
    });
    if (everywhere) return static_cast<Letter>(a);
  }
  return std::nullopt;
}

}  // namespace epimorph
