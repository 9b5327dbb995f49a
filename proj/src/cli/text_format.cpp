#include "epimorph/cli/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "epimorph/error.hpp"

namespace epimorph::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void parse_failure(const std::string& what) { throw Error(ErrorKind::parse_error, what); }

std::size_t digit_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<std::size_t>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<std::size_t>(c - 'a' + 10);
  parse_failure(std::string("not a letter glyph: '") + c + "'");
}

std::size_t inferred_size(std::string_view text) {
  std::size_t k = 0;
  for (char c : text) k = std::max(k, digit_value(c) + 1);
  return k;
}

}  // namespace

Word parse_word(std::string_view text, std::size_t alphabet_size) {
  text = trim(text);
  if (text == "e" || text == "ε") text = {};
  const std::size_t k = alphabet_size ? alphabet_size : std::max<std::size_t>(inferred_size(text), 2);
  try {
    return Word::digits(text, k);
  } catch (const Error& e) {
    parse_failure(e.what());
  }
}

DirectiveSpec parse_directive(std::string_view text) {
  std::map<std::string, std::string> fields;
  for (auto part : split(text, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) parse_failure("directive field without '=': " + std::string(part));
    const std::string key(trim(part.substr(0, eq)));
    if (key != "seed" && key != "pre" && key != "per" && key != "k") parse_failure("unknown directive field: " + key);
    if (!fields.emplace(key, std::string(trim(part.substr(eq + 1)))).second) {
      parse_failure("repeated directive field: " + key);
    }
  }
  if (!fields.count("per") || fields["per"].empty()) parse_failure("directive needs a nonempty 'per' field");
  std::size_t k = fields.count("k") ? parse_count(fields["k"]) : 0;
  if (!k) {
    for (const char* key : {"seed", "pre", "per"}) {
      if (fields.count(key)) k = std::max(k, inferred_size(fields[key]));
    }
    k = std::max<std::size_t>(k, 2);
  }
  DirectiveSpec spec;
  spec.alphabet_size = k;
  spec.seed = parse_word(fields["seed"], k);
  spec.preperiod = parse_word(fields["pre"], k);
  spec.period = parse_word(fields["per"], k);
  try {
    spec.validate();
  } catch (const Error& e) {
    parse_failure(e.what());
  }
  return spec;
}

std::string format_directive(const DirectiveSpec& spec) {
  std::string out;
  if (!spec.seed.empty()) out += "seed=" + spec.seed.str() + ";";
  if (!spec.preperiod.empty()) out += "pre=" + spec.preperiod.str() + ";";
  return out + "per=" + spec.period.str();
}

Morphism parse_morphism(std::string_view text, std::size_t codomain_size) {
  std::map<std::size_t, std::string> images;
  for (auto part : split(text, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string_view::npos || colon == 0) {
      parse_failure("morphism entry must look like a:image, got '" + std::string(part) + "'");
    }
    const std::size_t a = parse_count(part.substr(0, colon));
    if (!images.emplace(a, std::string(trim(part.substr(colon + 1)))).second) {
      parse_failure("letter " + std::to_string(a) + " given twice");
    }
  }
  const std::size_t n = images.size();
  if (images.rbegin()->first != n - 1) parse_failure("domain letters must be 0.." + std::to_string(n - 1));
  std::size_t k = codomain_size;
  if (!k) {
    for (const auto& [a, img] : images) k = std::max(k, inferred_size(img));
    k = std::max<std::size_t>(k, 2);
  }
  std::vector<Word> words;
  for (const auto& [a, img] : images) words.push_back(parse_word(img, k));
  const std::size_t domain = std::max<std::size_t>(n, 1);
  try {
    return Morphism(Alphabet(domain), Alphabet(k), std::move(words));
  } catch (const Error& e) {
    parse_failure(e.what());
  }
}

std::string format_morphism(const Morphism& m) {
  std::string out;
  const auto images = m.images();
  for (std::size_t a = 0; a < images.size(); ++a) {
    if (a) out += ",";
    out += std::string(1, m.domain().glyph(static_cast<Letter>(a))) + ":" + images[a].str();
  }
  return out;
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    const auto v = digit_value(c);
    if (v >= Alphabet::max_size) parse_failure("letter out of range");
    out.push_back(static_cast<Letter>(v));
  }
  if (out.empty()) parse_failure("empty letter list");
  return out;
}

std::size_t parse_count(std::string_view text) {
  text = trim(text);
  const auto e = text.find_first_of("eE");
  std::size_t mantissa = 0, exponent = 0;
  auto read = [&](std::string_view part, std::size_t& value) {
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (part.empty() || ec != std::errc() || ptr != end) parse_failure("not a count: '" + std::string(text) + "'");
  };
  if (e == std::string_view::npos) {
    read(text, mantissa);
    return mantissa;
  }
  read(text.substr(0, e), mantissa);
  read(text.substr(e + 1), exponent);
  if (exponent > 18) parse_failure("count too large: " + std::string(text));
  for (std::size_t i = 0; i < exponent; ++i) mantissa *= 10;
  return mantissa;
}

std::vector<std::size_t> parse_checkpoints(std::string_view text) {
  std::vector<std::size_t> out;
  for (auto part : split(text, ',')) out.push_back(parse_count(part));
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) parse_failure("checkpoints must be strictly increasing");
  }
  return out;
}

std::vector<std::size_t> log_checkpoints(std::size_t lo, std::size_t hi, std::size_t count) {
  std::vector<std::size_t> out;
  if (count == 1) return {hi};
  const double ratio = std::log(static_cast<double>(hi) / static_cast<double>(lo)) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    auto v = static_cast<std::size_t>(std::llround(static_cast<double>(lo) * std::exp(ratio * static_cast<double>(i))));
    if (i + 1 == count) v = hi;
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  return out;
}

std::map<std::string, std::string> parse_config(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      parse_failure("config line " + std::to_string(line_no) + " is not key=value");
    }
    std::string key(trim(line.substr(0, eq)));
    while (!key.empty() && key.front() == '-') key.erase(key.begin());
    out[key] = std::string(trim(line.substr(eq + 1)));
  }
  return out;
}

}  // namespace epimorph::cli
