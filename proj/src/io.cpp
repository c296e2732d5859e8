#include "archtrace/io.hpp"

#include "archtrace/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace archtrace {

const char* to_string(LinkKind kind) {
    switch (kind) {
    case LinkKind::SadSam:
        return "sad-sam";
    case LinkKind::SamCode:
        return "sam-code";
    case LinkKind::SadCode:
        return "sad-code";
    }
    return "unknown";
}

bool is_valid_utf8(std::string_view bytes) {
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(bytes[i]);
        std::size_t len = 0;
        unsigned int code = 0;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            code = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            code = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            code = c & 0x07;
        } else {
            return false;
        }
        if (i + len > n) {
            return false;
        }
        for (std::size_t k = 1; k < len; ++k) {
            const unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
            if ((cc & 0xC0) != 0x80) {
                return false;
            }
            code = (code << 6) | (cc & 0x3F);
        }
        // Overlong encodings, UTF-16 surrogates, and values past U+10FFFF are invalid.
        if ((len == 2 && code < 0x80) || (len == 3 && code < 0x800) ||
            (len == 4 && code < 0x10000) || (code >= 0xD800 && code <= 0xDFFF) ||
            code > 0x10FFFF) {
            return false;
        }
        i += len;
    }
    return true;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("error while reading: " + path.string());
    }
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open file for writing: " + path.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw IoError("error while writing: " + path.string());
    }
}

namespace {

std::vector<std::string> split_lines(std::string_view content) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < content.size()) {
                lines.emplace_back(content.substr(start));
            }
            break;
        }
        lines.emplace_back(content.substr(start, end - start));
        start = end + 1;
    }
    for (auto& line : lines) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
    }
    return lines;
}

} // namespace

SadDocument load_sad(const std::filesystem::path& path) {
    const std::string content = read_file(path);
    if (!is_valid_utf8(content)) {
        throw FormatError("not valid UTF-8: " + path.string());
    }
    auto lines = split_lines(content);
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    SadDocument sad;
    sad.project = path.stem().string();
    sad.sentences.reserve(lines.size());
    for (std::size_t k = 0; k < lines.size(); ++k) {
        sad.sentences.push_back(Sentence{static_cast<int>(k + 1), std::move(lines[k])});
    }
    return sad;
}

namespace csv {

std::vector<std::string> split_record(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(c);
        }
        ++i;
    }
    if (quoted) {
        throw FormatError("unterminated quoted CSV field: " + line);
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string escape_field(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

} // namespace csv

namespace {

// Parses "header-then-rows" CSV content into two-field records.
std::vector<std::pair<std::string, std::string>>
read_two_column_csv(const std::filesystem::path& path, const std::string& expected_header) {
    const std::string content = read_file(path);
    if (!is_valid_utf8(content)) {
        throw FormatError("not valid UTF-8: " + path.string());
    }
    auto lines = split_lines(content);
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    if (lines.empty() || lines.front() != expected_header) {
        throw FormatError("missing header \"" + expected_header + "\" in " + path.string());
    }
    std::vector<std::pair<std::string, std::string>> rows;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        if (lines[k].empty()) {
            continue;
        }
        auto fields = csv::split_record(lines[k]);
        if (fields.size() != 2) {
            throw FormatError("expected 2 fields on line " + std::to_string(k + 1) + " of " +
                              path.string());
        }
        rows.emplace_back(std::move(fields[0]), std::move(fields[1]));
    }
    return rows;
}

} // namespace

Sam load_component_list(const std::filesystem::path& path) {
    Sam sam;
    sam.project = path.stem().string();
    sam.provenance = Provenance::Manual;
    std::set<std::string> seen;
    for (auto& [id, name] : read_two_column_csv(path, "id,name")) {
        if (id.empty()) {
            throw FormatError("empty component id in " + path.string());
        }
        if (name.empty()) {
            throw FormatError("empty component name in " + path.string());
        }
        if (!seen.insert(id).second) {
            throw FormatError("duplicate component id \"" + id + "\" in " + path.string());
        }
        sam.components.push_back(Component{std::move(id), std::move(name)});
    }
    return sam;
}

GoldStandard load_gold_links(const std::filesystem::path& path, LinkKind kind) {
    GoldStandard gold;
    gold.kind = kind;
    gold.links = LinkSet(kind);
    for (auto& [left, right] : read_two_column_csv(path, "left,right")) {
        gold.links.add(std::move(left), std::move(right));
    }
    return gold;
}

void write_links(const LinkSet& links, const std::filesystem::path& path) {
    std::string out = "left,right\n";
    for (const auto& [left, right] : links.pairs()) {
        out += csv::escape_field(left);
        out.push_back(',');
        out += csv::escape_field(right);
        out.push_back('\n');
    }
    write_file(path, out);
}

void write_sam(const Sam& sam, const std::filesystem::path& path) {
    std::string out = "id,name\n";
    for (const auto& component : sam.components) {
        out += csv::escape_field(component.id);
        out.push_back(',');
        out += csv::escape_field(component.name);
        out.push_back('\n');
    }
    write_file(path, out);
}

} // namespace archtrace
