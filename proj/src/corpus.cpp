#include "editstat/corpus.hpp"

#include "editstat/error.hpp"
#include "editstat/metric.hpp"
#include "editstat/unicode.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace editstat {

char version_letter(Version v) noexcept {
    switch (v) {
        case Version::A: return 'A';
        case Version::B: return 'B';
        case Version::C: return 'C';
    }
    return '?';
}

std::optional<Version> parse_version(std::string_view label) noexcept {
    if (label == "A") return Version::A;
    if (label == "B") return Version::B;
    if (label == "C") return Version::C;
    return std::nullopt;
}

const Witness* Corpus::find(std::string_view id) const noexcept {
    for (const Witness& w : witnesses)
        if (w.id == id) return &w;
    return nullptr;
}

namespace {

using json = nlohmann::json;

[[noreturn]] void record_error(std::string_view source, std::size_t index,
                               const std::string& message) {
    throw DataError(std::string(source) + ": witness record " +
                    std::to_string(index) + ": " + message);
}

}  // namespace

Corpus parse_corpus(std::string_view json_text, std::string_view source_name) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DataError(std::string(source_name) + ": not valid JSON: " + e.what());
    }
    if (!doc.is_object())
        throw DataError(std::string(source_name) +
                        ": top-level value must be an object");
    if (!doc.contains("witnesses") || !doc["witnesses"].is_array())
        throw DataError(std::string(source_name) +
                        ": field \"witnesses\" missing or not an array");

    Corpus corpus;
    std::set<std::string> seen_ids;
    const json& records = doc["witnesses"];
    for (std::size_t index = 0; index < records.size(); ++index) {
        const json& record = records[index];
        if (!record.is_object())
            record_error(source_name, index, "not an object");

        Witness w;
        if (!record.contains("id") || !record["id"].is_string())
            record_error(source_name, index,
                         "field \"id\" missing or not a string");
        w.id = record["id"].get<std::string>();
        if (w.id.empty()) record_error(source_name, index, "empty id");
        if (!seen_ids.insert(w.id).second)
            record_error(source_name, index, "duplicate witness id \"" + w.id + "\"");

        if (record.contains("version")) {
            if (!record["version"].is_string())
                record_error(source_name, index,
                             "(id " + w.id + "): field \"version\" must be a string");
            const std::string label = record["version"].get<std::string>();
            const auto version = parse_version(label);
            if (!version)
                record_error(source_name, index,
                             "(id " + w.id + "): invalid version label \"" + label +
                                 "\" (expected A, B, or C)");
            w.version = *version;
        }

        if (!record.contains("lines") || !record["lines"].is_array())
            record_error(source_name, index,
                         "(id " + w.id + "): field \"lines\" missing or not an array");
        for (const json& line : record["lines"]) {
            if (!line.is_string())
                record_error(source_name, index,
                             "(id " + w.id + "): field \"lines\" contains a non-string");
            w.lines.push_back(line.get<std::string>());
        }
        corpus.witnesses.push_back(std::move(w));
    }

    if (doc.contains("excluded")) {
        if (!doc["excluded"].is_array())
            throw DataError(std::string(source_name) +
                            ": field \"excluded\" must be an array");
        for (const json& entry : doc["excluded"]) {
            std::string id, reason;
            if (entry.is_string()) {
                id = entry.get<std::string>();
            } else if (entry.is_object() && entry.contains("id") &&
                       entry["id"].is_string()) {
                id = entry["id"].get<std::string>();
                if (entry.contains("reason") && entry["reason"].is_string())
                    reason = entry["reason"].get<std::string>();
            } else {
                throw DataError(std::string(source_name) +
                                ": exclusion entries need an \"id\"");
            }
            auto it = std::find_if(corpus.witnesses.begin(), corpus.witnesses.end(),
                                   [&](const Witness& w) { return w.id == id; });
            if (it == corpus.witnesses.end())
                throw DataError(std::string(source_name) +
                                ": excluded id \"" + id + "\" names no witness");
            it->excluded = true;
            it->exclusion_reason = reason;
        }
    }

    for (const Witness& w : corpus.witnesses)
        if (!w.excluded && w.lines.empty())
            throw DataError(std::string(source_name) + ": witness " + w.id +
                            ": empty lines (only excluded witnesses may have none)");
    return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open corpus file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw DataError("I/O failure reading corpus file: " + path.string());
    return parse_corpus(buffer.str(), path.string());
}

// ---------------------------------------------------------------------------
// Normalization and tokenization

std::u32string normalize_scalars(std::u32string_view line,
                                 const Normalization& norm) {
    std::u32string out(line);
    if (norm.fold_case)
        for (char32_t& c : out) c = fold_scalar(c);

    if (norm.map_ampersand_to_and) {
        // Replace whitespace-delimited "&" runs; spacing stays untouched.
        std::u32string mapped;
        mapped.reserve(out.size());
        std::size_t i = 0;
        while (i < out.size()) {
            if (is_space_scalar(out[i])) {
                mapped += out[i++];
                continue;
            }
            std::size_t j = i;
            while (j < out.size() && !is_space_scalar(out[j])) ++j;
            if (j - i == 1 && out[i] == U'&') mapped += U"and";
            else mapped.append(out, i, j - i);
            i = j;
        }
        out = std::move(mapped);
    }

    if (norm.strip_punctuation)
        out.erase(std::remove_if(out.begin(), out.end(), is_punct_scalar),
                  out.end());
    return out;
}

std::string normalize_text(std::string_view line, const Normalization& norm) {
    return encode_utf8(normalize_scalars(decode_utf8(line), norm));
}

std::vector<Token> tokenize(std::string_view line, const Normalization& norm) {
    const std::u32string scalars = decode_utf8(line);
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < scalars.size()) {
        while (i < scalars.size() && is_space_scalar(scalars[i])) ++i;
        if (i >= scalars.size()) break;
        std::size_t j = i;
        while (j < scalars.size() && !is_space_scalar(scalars[j])) ++j;
        const std::u32string_view word(scalars.data() + i, j - i);
        out.push_back(Token{encode_utf8(word),
                            encode_utf8(normalize_scalars(word, norm))});
        i = j;
    }
    return out;
}

std::vector<std::string> select_lines(const Witness& w) {
    if (w.excluded)
        throw DataError("select_lines: witness " + w.id + " is excluded");
    if (w.lines.size() < 6)
        throw DataError("select_lines: witness " + w.id + " has " +
                        std::to_string(w.lines.size()) +
                        " lines; the rule needs at least 6");
    std::vector<std::string> out;
    out.reserve(6);
    out.push_back(w.lines[2]);
    out.push_back(w.lines[3]);
    for (std::size_t i = w.lines.size() - 4; i < w.lines.size(); ++i)
        out.push_back(w.lines[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Token alignment

TokenAlignment align_tokens(std::span<const std::vector<Token>> lines) {
    if (lines.size() < 2)
        throw DataError("align_tokens: need at least 2 lines");

    // Modal token count; map iteration order resolves ties toward the
    // smaller count.
    std::map<std::size_t, std::size_t> frequency;
    for (const auto& line : lines) ++frequency[line.size()];
    std::size_t modal = 0, best_frequency = 0;
    for (const auto& [count, freq] : frequency)
        if (freq > best_frequency) { modal = count; best_frequency = freq; }

    TokenAlignment out;
    out.template_length = modal;
    out.slots.resize(lines.size());

    std::size_t ref_index = 0;
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].size() == modal) { ref_index = i; break; }

    std::vector<std::vector<std::u32string>> comparison(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        comparison[i].reserve(lines[i].size());
        for (const Token& tok : lines[i])
            comparison[i].push_back(decode_utf8(tok.comparison));
    }
    const auto& ref = comparison[ref_index];

    for (std::size_t li = 0; li < lines.size(); ++li) {
        auto& slot_map = out.slots[li];
        slot_map.assign(modal, std::nullopt);
        const auto& tokens = comparison[li];
        if (tokens.size() == modal) {
            for (std::size_t s = 0; s < modal; ++s) slot_map[s] = s;
            continue;
        }

        // Minimum-cost alignment against the reference: substituting token u
        // for v costs edit_distance(u, v), a gap costs the skipped token's
        // length.
        const std::size_t m = tokens.size();
        const std::size_t width = modal + 1;
        std::vector<std::uint64_t> dp((m + 1) * width);
        auto cell = [&](std::size_t i, std::size_t s) -> std::uint64_t& {
            return dp[i * width + s];
        };
        cell(0, 0) = 0;
        for (std::size_t i = 1; i <= m; ++i)
            cell(i, 0) = cell(i - 1, 0) + tokens[i - 1].size();
        for (std::size_t s = 1; s <= modal; ++s)
            cell(0, s) = cell(0, s - 1) + ref[s - 1].size();
        for (std::size_t i = 1; i <= m; ++i) {
            for (std::size_t s = 1; s <= modal; ++s) {
                const std::uint64_t sub =
                    cell(i - 1, s - 1) + edit_distance(tokens[i - 1], ref[s - 1]);
                const std::uint64_t drop_token =
                    cell(i - 1, s) + tokens[i - 1].size();
                const std::uint64_t skip_slot = cell(i, s - 1) + ref[s - 1].size();
                cell(i, s) = std::min({sub, drop_token, skip_slot});
            }
        }

        // Traceback preference on ties: substitution, then dropping the line
        // token, then skipping the slot. Fixed so alignments are
        // deterministic.
        std::size_t i = m, s = modal;
        while (i > 0 || s > 0) {
            if (i > 0 && s > 0 &&
                cell(i, s) == cell(i - 1, s - 1) +
                                  edit_distance(tokens[i - 1], ref[s - 1])) {
                slot_map[s - 1] = i - 1;
                --i; --s;
            } else if (i > 0 &&
                       cell(i, s) == cell(i - 1, s) + tokens[i - 1].size()) {
                --i;
            } else {
                --s;
            }
        }
    }
    return out;
}

}  // namespace editstat
