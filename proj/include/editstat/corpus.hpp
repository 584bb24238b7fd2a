#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace editstat {

enum class Version { A, B, C };

char version_letter(Version v) noexcept;
std::optional<Version> parse_version(std::string_view label) noexcept;

// Normalization applies to comparison copies only; original text is always
// retained for reporting. Steps run in order: case folding, ampersand
// mapping, punctuation stripping.
struct Normalization {
    bool fold_case = true;
    bool map_ampersand_to_and = false;
    bool strip_punctuation = false;
};

// One manuscript excerpt: an identified sequence of lines with an optional
// version label.
struct Witness {
    std::string id;
    std::optional<Version> version;
    std::vector<std::string> lines;
    bool excluded = false;
    std::string exclusion_reason;
};

struct Corpus {
    std::vector<Witness> witnesses;  // ingestion order
    Normalization normalization;

    const Witness* find(std::string_view id) const noexcept;
};

// Corpus file format: one UTF-8 JSON document with a "witnesses" array and
// an optional "excluded" array of {"id", "reason"} records. Each witness
// has "id" (string), optional "version" ("A"/"B"/"C") and "lines" (array of
// strings). Errors name the offending record and field.
Corpus load_corpus(const std::filesystem::path& path);
Corpus parse_corpus(std::string_view json_text,
                    std::string_view source_name = "<memory>");

// A whitespace-delimited word with its normalized comparison form.
struct Token {
    std::string original;
    std::string comparison;
};

// Splits on runs of ASCII whitespace; "&" is a token. The comparison form
// carries the normalization, the original is kept verbatim.
std::vector<Token> tokenize(std::string_view line, const Normalization& norm);

// Normalized comparison copy of a whole line. Whitespace is preserved so
// that character-level distances are unaffected by spacing.
std::u32string normalize_scalars(std::u32string_view line,
                                 const Normalization& norm);
std::string normalize_text(std::string_view line, const Normalization& norm);

// Lines at 1-based positions 3 and 4 plus the final four lines, in that
// order. Requires an included witness with at least 6 lines.
std::vector<std::string> select_lines(const Witness& w);

// Mapping of template slots to tokens per line. Slots are filled in
// increasing order (no crossing); a line token maps to at most one slot.
struct TokenAlignment {
    std::size_t template_length = 0;
    // slots[line][slot] -> token index within that line, if any.
    std::vector<std::vector<std::optional<std::size_t>>> slots;
};

// Template length is the modal token count (ties toward the smaller count).
// Modal-count lines align positionally; other lines align against the first
// modal-count line by minimum-cost alignment where substituting token u for
// v costs edit_distance(u, v) on comparison forms and a gap costs the
// skipped token's length.
TokenAlignment align_tokens(std::span<const std::vector<Token>> lines);

}  // namespace editstat
