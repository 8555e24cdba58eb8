#include "ks/vector_set_format.hpp"

#include <cctype>
#include <optional>

#include "ks/catalog.hpp"

namespace ks {
namespace {

class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw VectorSetParseError(line_, pos_ + 1, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size() || text_[pos_] == '#';
  }
  bool peek(std::string_view token) {
    skip_space();
    return text_.substr(pos_).starts_with(token);
  }
  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                                   text_[pos_] == '-' || text_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::optional<BigInt> integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) return std::nullopt;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  // unit := "w" | "w^2" | "ω" | "ω^2" | "ω²"; returns the power (0 if absent)
  int unit() {
    if (accept("w") || accept("\xCF\x89")) {
      if (accept("^2") || accept("\xC2\xB2")) return 2;
      if (accept("^1")) return 1;
      return 1;
    }
    return 0;
  }

  // term := rational ["*"] [unit] | unit
  EisensteinScalar term() {
    Rational coeff = 1;
    bool has_coeff = false;
    if (auto num = integer()) {
      has_coeff = true;
      coeff = Rational(*num);
      if (accept("/")) {
        auto den = integer();
        if (!den) fail("expected denominator");
        if (*den == 0) fail("zero denominator");
        coeff /= Rational(*den);
      }
    }
    const bool star = has_coeff && accept("*");
    const int power = unit();
    if (!has_coeff && power == 0) fail("expected a number or 'w'");
    if (star && power == 0) fail("expected 'w' after '*'");
    switch (power) {
      case 1: return EisensteinScalar(0, coeff);
      case 2: return EisensteinScalar(-coeff, -coeff);
      default: return EisensteinScalar(coeff);
    }
  }

  EisensteinScalar element() {
    EisensteinScalar total;
    bool negative = false;
    if (accept("-")) {
      negative = true;
    } else {
      accept("+");
    }
    while (true) {
      EisensteinScalar t = term();
      total += negative ? -t : t;
      if (accept("+")) {
        negative = false;
      } else if (accept("-")) {
        negative = true;
      } else {
        return total;
      }
    }
  }

  Ket vector() {
    skip_space();
    const std::size_t col = pos_ + 1;
    expect("(");
    std::vector<EisensteinScalar> entries;
    entries.push_back(element());
    while (accept(",")) entries.push_back(element());
    expect(")");
    try {
      return Ket(std::move(entries));
    } catch (const InputError& e) {
      throw VectorSetParseError(line_, col, e.what());
    }
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

ContextSet parse_vector_set(std::string_view text) {
  std::vector<NamedBasis> bases;
  std::optional<int> dimension;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineCursor cur(line, lineno);
    if (cur.at_end()) continue;
    if (cur.accept("dimension")) {
      auto d = cur.integer();
      if (!d || *d < 1 || *d > 64) cur.fail("expected a dimension between 1 and 64");
      if (dimension) cur.fail("duplicate dimension line");
      if (!bases.empty()) cur.fail("dimension must precede the bases");
      dimension = d->convert_to<int>();
    } else if (cur.accept("basis")) {
      NamedBasis basis;
      basis.name = cur.identifier();
      cur.expect(":");
      basis.vectors.push_back(cur.vector());
      while (cur.accept(";")) {
        if (cur.at_end()) break;
        basis.vectors.push_back(cur.vector());
      }
      if (!cur.at_end()) cur.fail("unexpected text after basis");
      if (!dimension) dimension = static_cast<int>(basis.vectors.front().dimension());
      for (const auto& v : basis.vectors) {
        if (static_cast<int>(v.dimension()) != *dimension) {
          throw VectorSetParseError(lineno, 1,
                                    "basis " + basis.name + ": vector " + v.to_string() + " has dimension " +
                                        std::to_string(v.dimension()) + ", expected " + std::to_string(*dimension));
        }
      }
      bases.push_back(std::move(basis));
    } else {
      cur.fail("expected 'basis' or 'dimension'");
    }
  }
  if (bases.empty()) throw InputError("vector set contains no bases");
  return build_context_set(*dimension, bases);
}

std::string render_vector_set(const ContextSet& cs) {
  std::string out = "dimension " + std::to_string(cs.dimension) + "\n";
  for (std::size_t c = 0; c < cs.contexts.size(); ++c) {
    out += "basis " + cs.context_names[c] + ": ";
    for (std::size_t i = 0; i < cs.contexts[c].size(); ++i) {
      if (i) out += "; ";
      out += cs.rays[cs.contexts[c][i]].to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace ks
