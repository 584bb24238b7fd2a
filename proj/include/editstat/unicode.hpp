#pragma once

#include <string>
#include <string_view>

namespace editstat {

// Strict UTF-8 decoding to Unicode scalar values. Rejects overlong forms,
// surrogates, values above U+10FFFF and truncated sequences; the reported
// offset is the byte position of the offending sequence. Throws DataError.
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view scalars);

bool is_valid_utf8(std::string_view text) noexcept;

// Lowercase folding for the scripts this library handles: Basic Latin,
// Latin-1 Supplement and yogh (U+021C -> U+021D). Other scalars pass through.
char32_t fold_scalar(char32_t c) noexcept;

std::u32string fold_case(std::u32string_view text);

// ASCII whitespace; token boundaries for tokenization.
bool is_space_scalar(char32_t c) noexcept;

// ASCII punctuation; the set removed by Normalization::strip_punctuation.
bool is_punct_scalar(char32_t c) noexcept;

}  // namespace editstat
