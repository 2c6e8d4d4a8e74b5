#pragma once

#include <random>
#include <string>

#include "qmonoid/core.hpp"

namespace qmonoid::test {

  inline Alphabet const ab{"ab"};

  inline Word W(std::string const& text) {
    return parse_word(text);
  }

  inline NormalForm nf(std::string const& text) {
    return rewrite_normalize(parse_word(text));
  }

  inline NormalForm NF(Letters r, Letters s, Letters w) {
    return {std::move(r), std::move(s), std::move(w)};
  }

  inline Word random_word(std::mt19937_64& rng,
                          Alphabet const&  alphabet,
                          std::size_t      length) {
    std::uniform_int_distribution<std::size_t> pick(0, 2 * alphabet.size() - 1);
    Word                                       w;
    for (std::size_t i = 0; i < length; ++i) {
      std::size_t c = pick(rng);
      w.push_back(c < alphabet.size()
                      ? Symbol::write(alphabet[c])
                      : Symbol::read(alphabet[c - alphabet.size()]));
    }
    return w;
  }

}  // namespace qmonoid::test
