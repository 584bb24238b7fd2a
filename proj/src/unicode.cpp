#include "editstat/unicode.hpp"

#include "editstat/error.hpp"

namespace editstat {

namespace {

[[noreturn]] void bad_byte(std::size_t offset) {
    throw DataError("invalid UTF-8 at byte " + std::to_string(offset));
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const auto b0 = static_cast<unsigned char>(text[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        std::size_t len;
        char32_t cp;
        char32_t min_value;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2; cp = b0 & 0x1Fu; min_value = 0x80;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3; cp = b0 & 0x0Fu; min_value = 0x800;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4; cp = b0 & 0x07u; min_value = 0x10000;
        } else {
            bad_byte(i);
        }
        if (i + len > text.size()) bad_byte(i);
        for (std::size_t k = 1; k < len; ++k) {
            const auto bk = static_cast<unsigned char>(text[i + k]);
            if ((bk & 0xC0) != 0x80) bad_byte(i + k);
            cp = (cp << 6) | (bk & 0x3Fu);
        }
        // Overlong forms, surrogates and out-of-range values are data errors.
        if (cp < min_value || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            bad_byte(i);
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_utf8(std::u32string_view scalars) {
    std::string out;
    out.reserve(scalars.size());
    for (char32_t cp : scalars) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

bool is_valid_utf8(std::string_view text) noexcept {
    try {
        decode_utf8(text);
        return true;
    } catch (const DataError&) {
        return false;
    }
}

char32_t fold_scalar(char32_t c) noexcept {
    if (c >= U'A' && c <= U'Z') return c + 0x20;
    // Latin-1 capitals A-grave .. thorn, skipping the multiplication sign.
    if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
    if (c == 0x021C) return 0x021D;  // yogh
    return c;
}

std::u32string fold_case(std::u32string_view text) {
    std::u32string out(text);
    for (char32_t& c : out) c = fold_scalar(c);
    return out;
}

bool is_space_scalar(char32_t c) noexcept {
    return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' ||
           c == U'\f' || c == U'\v';
}

bool is_punct_scalar(char32_t c) noexcept {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
}

}  // namespace editstat
