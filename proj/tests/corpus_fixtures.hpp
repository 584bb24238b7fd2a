#pragma once

// Seeded in-memory corpora for the analysis tests: a base poem copied per
// witness with a version-dependent number of random scalar edits.

#include "editstat/corpus.hpp"
#include "editstat/unicode.hpp"

#include <random>
#include <string>
#include <vector>

namespace fixtures {

inline constexpr std::u32string_view kLetters = U"abcdefghilmnoprstuwyþȝ";

inline void mutate(std::u32string& text, std::mt19937_64& rng, std::size_t edits) {
    for (std::size_t e = 0; e < edits; ++e) {
        const auto op = text.empty() ? 1 : rng() % 3;
        const char32_t c = kLetters[rng() % kLetters.size()];
        switch (op) {
            case 0: text[rng() % text.size()] = c; break;
            case 1: text.insert(text.begin() + rng() % (text.size() + 1), c); break;
            default: text.erase(text.begin() + rng() % text.size()); break;
        }
    }
}

inline std::vector<std::u32string> base_poem(std::mt19937_64& rng,
                                             std::size_t lines,
                                             std::size_t words_per_line) {
    std::vector<std::u32string> out;
    for (std::size_t li = 0; li < lines; ++li) {
        std::u32string line;
        for (std::size_t w = 0; w < words_per_line; ++w) {
            if (w > 0) line += U' ';
            const std::size_t len = 3 + rng() % 6;
            for (std::size_t i = 0; i < len; ++i)
                line += kLetters[rng() % kLetters.size()];
        }
        out.push_back(line);
    }
    return out;
}

struct GroupSpec {
    editstat::Version version;
    std::size_t witnesses;
    std::size_t edits_per_line;
};

// One base poem; each witness is the poem with `edits_per_line` random edits
// applied per line. Deterministic in the seed.
inline editstat::Corpus synthetic_corpus(std::uint64_t seed,
                                         std::initializer_list<GroupSpec> groups,
                                         std::size_t lines_per_witness = 8) {
    std::mt19937_64 rng(seed);
    const auto poem = base_poem(rng, lines_per_witness, 5);

    editstat::Corpus corpus;
    for (const GroupSpec& group : groups) {
        for (std::size_t i = 0; i < group.witnesses; ++i) {
            editstat::Witness w;
            w.id = std::string(1, editstat::version_letter(group.version)) +
                   std::to_string(i + 1);
            w.version = group.version;
            for (const auto& line : poem) {
                std::u32string copy = line;
                mutate(copy, rng, group.edits_per_line);
                w.lines.push_back(editstat::encode_utf8(copy));
            }
            corpus.witnesses.push_back(std::move(w));
        }
    }
    return corpus;
}

}  // namespace fixtures
