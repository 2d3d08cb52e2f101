#include "brauer/document.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

namespace brauer {

namespace {

struct Position {
    std::size_t line;
    std::size_t column;
};

// Recursive-descent reader for the document grammar (a small JSON subset:
// objects, arrays, strings, integers). Tracks 1-based line and column so
// every SyntaxError points at the offending token.
class Reader {
public:
    explicit Reader(const std::string& text) : text_(text) {}

    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError(line_, column_, message);
    }

    [[noreturn]] static void fail_at(Position pos, const std::string& message) {
        throw SyntaxError(pos.line, pos.column, message);
    }

    bool at_end() const { return pos_ >= text_.size(); }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    char take() {
        if (at_end()) fail("unexpected end of document");
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_ws() {
        while (!at_end()) {
            char c = text_[pos_];
            if (c != ' ' && c != '\t' && c != '\r' && c != '\n') break;
            take();
        }
    }

    Position position() {
        skip_ws();
        return {line_, column_};
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        take();
    }

    std::string parse_string() {
        skip_ws();
        if (peek() != '"') fail("expected string");
        take();
        std::string out;
        for (;;) {
            if (at_end()) fail("unterminated string");
            char c = take();
            if (c == '"') break;
            if (c == '\\') {
                parse_escape(out);
            } else if (static_cast<unsigned char>(c) < 0x20) {
                fail("control character in string");
            } else {
                out += c;
            }
        }
        return out;
    }

    std::int64_t parse_integer() {
        skip_ws();
        std::string digits;
        if (peek() == '-') digits += take();
        if (!is_digit(peek())) fail("expected integer");
        while (is_digit(peek())) digits += take();
        if (peek() == '.' || peek() == 'e' || peek() == 'E') fail("expected integer");
        const std::size_t first_digit = digits[0] == '-' ? 1 : 0;
        if (digits.size() - first_digit > 1 && digits[first_digit] == '0') {
            fail("leading zeros are not allowed");
        }
        std::int64_t value = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || end != digits.data() + digits.size()) {
            fail("integer out of range");
        }
        return value;
    }

private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    unsigned parse_hex4() {
        unsigned value = 0;
        for (int i = 0; i < 4; ++i) {
            char c = take();
            value <<= 4;
            if (c >= '0' && c <= '9') {
                value |= static_cast<unsigned>(c - '0');
            } else if (c >= 'a' && c <= 'f') {
                value |= static_cast<unsigned>(c - 'a' + 10);
            } else if (c >= 'A' && c <= 'F') {
                value |= static_cast<unsigned>(c - 'A' + 10);
            } else {
                fail("invalid \\u escape");
            }
        }
        return value;
    }

    void parse_escape(std::string& out) {
        if (at_end()) fail("unterminated string");
        char e = take();
        switch (e) {
            case '"': out += '"'; return;
            case '\\': out += '\\'; return;
            case '/': out += '/'; return;
            case 'b': out += '\b'; return;
            case 'f': out += '\f'; return;
            case 'n': out += '\n'; return;
            case 'r': out += '\r'; return;
            case 't': out += '\t'; return;
            case 'u': break;
            default: fail("invalid escape");
        }
        char32_t code = parse_hex4();
        if (code >= 0xD800 && code <= 0xDBFF) {
            // High surrogate: the low half must follow immediately.
            if (take() != '\\' || take() != 'u') fail("unpaired surrogate");
            unsigned low = parse_hex4();
            if (low < 0xDC00 || low > 0xDFFF) fail("unpaired surrogate");
            code = 0x10000 + ((code - 0xD800) << 10) + (low - 0xDC00);
        } else if (code >= 0xDC00 && code <= 0xDFFF) {
            fail("unpaired surrogate");
        }
        append_utf8(out, code);
    }

    static void append_utf8(std::string& out, char32_t code) {
        if (code < 0x80) {
            out += static_cast<char>(code);
        } else if (code < 0x800) {
            out += static_cast<char>(0xC0 | (code >> 6));
            out += static_cast<char>(0x80 | (code & 0x3F));
        } else if (code < 0x10000) {
            out += static_cast<char>(0xE0 | (code >> 12));
            out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (code & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (code >> 18));
            out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (code & 0x3F));
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

// Sections in declaration order, before any model-level interpretation.
struct Document {
    std::vector<VertexId> vertices;
    std::vector<std::pair<PolygonId, std::vector<VertexId>>> polygons;
    std::vector<std::pair<VertexId, std::int64_t>> multiplicity;
    std::vector<std::pair<VertexId, std::vector<PolygonId>>> orientation;
    bool saw_vertices = false;
    bool saw_polygons = false;
    bool saw_multiplicity = false;
    bool saw_orientation = false;
};

std::vector<std::string> parse_name_array(Reader& r) {
    std::vector<std::string> names;
    r.expect('[');
    r.skip_ws();
    if (r.peek() != ']') {
        for (;;) {
            names.push_back(r.parse_string());
            r.skip_ws();
            if (r.peek() != ',') break;
            r.take();
        }
    }
    r.expect(']');
    return names;
}

void parse_vertices(Reader& r, Document& doc) {
    r.expect('[');
    r.skip_ws();
    if (r.peek() != ']') {
        for (;;) {
            Position pos = r.position();
            VertexId id{r.parse_string()};
            if (std::find(doc.vertices.begin(), doc.vertices.end(), id) != doc.vertices.end()) {
                Reader::fail_at(pos, "duplicate vertex '" + id.name + "'");
            }
            doc.vertices.push_back(std::move(id));
            r.skip_ws();
            if (r.peek() != ',') break;
            r.take();
        }
    }
    r.expect(']');
}

void parse_polygons(Reader& r, Document& doc) {
    r.expect('{');
    r.skip_ws();
    if (r.peek() != '}') {
        for (;;) {
            Position pos = r.position();
            PolygonId id{r.parse_string()};
            for (const auto& [existing, members] : doc.polygons) {
                if (existing == id) Reader::fail_at(pos, "duplicate polygon '" + id.name + "'");
            }
            r.expect(':');
            std::vector<VertexId> members;
            for (std::string& name : parse_name_array(r)) members.push_back({std::move(name)});
            doc.polygons.emplace_back(std::move(id), std::move(members));
            r.skip_ws();
            if (r.peek() != ',') break;
            r.take();
        }
    }
    r.expect('}');
}

void parse_multiplicity(Reader& r, Document& doc) {
    r.expect('{');
    r.skip_ws();
    if (r.peek() != '}') {
        for (;;) {
            Position key_pos = r.position();
            VertexId id{r.parse_string()};
            for (const auto& [existing, value] : doc.multiplicity) {
                if (existing == id) {
                    Reader::fail_at(key_pos, "duplicate multiplicity entry '" + id.name + "'");
                }
            }
            r.expect(':');
            Position value_pos = r.position();
            std::int64_t value = r.parse_integer();
            if (value < 1) Reader::fail_at(value_pos, "multiplicity must be positive");
            doc.multiplicity.emplace_back(std::move(id), value);
            r.skip_ws();
            if (r.peek() != ',') break;
            r.take();
        }
    }
    r.expect('}');
}

void parse_orientation(Reader& r, Document& doc) {
    r.expect('{');
    r.skip_ws();
    if (r.peek() != '}') {
        for (;;) {
            Position pos = r.position();
            VertexId id{r.parse_string()};
            for (const auto& [existing, sequence] : doc.orientation) {
                if (existing == id) {
                    Reader::fail_at(pos, "duplicate orientation entry '" + id.name + "'");
                }
            }
            r.expect(':');
            std::vector<PolygonId> sequence;
            for (std::string& name : parse_name_array(r)) sequence.push_back({std::move(name)});
            doc.orientation.emplace_back(std::move(id), std::move(sequence));
            r.skip_ws();
            if (r.peek() != ',') break;
            r.take();
        }
    }
    r.expect('}');
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned char>(c));
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

template <typename Id>
std::string quoted_list(const std::vector<Id>& ids) {
    std::string out = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) out += ", ";
        out += quote(ids[i].name);
    }
    out += "]";
    return out;
}

}  // namespace

BrauerConfiguration parse_configuration(const std::string& text) {
    Reader r(text);
    Document doc;
    r.expect('{');
    r.skip_ws();
    if (r.peek() != '}') {
        for (;;) {
            Position pos = r.position();
            std::string key = r.parse_string();
            r.expect(':');
            if (key == "vertices") {
                if (doc.saw_vertices) Reader::fail_at(pos, "duplicate section 'vertices'");
                doc.saw_vertices = true;
                parse_vertices(r, doc);
            } else if (key == "polygons") {
                if (doc.saw_polygons) Reader::fail_at(pos, "duplicate section 'polygons'");
                doc.saw_polygons = true;
                parse_polygons(r, doc);
            } else if (key == "multiplicity") {
                if (doc.saw_multiplicity) Reader::fail_at(pos, "duplicate section 'multiplicity'");
                doc.saw_multiplicity = true;
                parse_multiplicity(r, doc);
            } else if (key == "orientation") {
                if (doc.saw_orientation) Reader::fail_at(pos, "duplicate section 'orientation'");
                doc.saw_orientation = true;
                parse_orientation(r, doc);
            } else {
                Reader::fail_at(pos, "unknown section '" + key + "'");
            }
            r.skip_ws();
            if (r.peek() != ',') break;
            r.take();
        }
    }
    r.expect('}');
    r.skip_ws();
    if (!r.at_end()) r.fail("trailing content after document");
    if (!doc.saw_vertices) r.fail("missing section 'vertices'");
    if (!doc.saw_polygons) r.fail("missing section 'polygons'");

    BrauerConfiguration config;
    config.vertices = std::move(doc.vertices);
    for (auto& [id, members] : doc.polygons) {
        config.polygons.emplace_back(std::move(id), members);
    }
    for (auto& [id, value] : doc.multiplicity) config.multiplicity[id] = value;
    for (auto& [id, sequence] : doc.orientation) {
        config.orientation[id] = SuccessorSequence{id, std::move(sequence)};
    }

    auto violations = config.validate();
    if (!violations.empty()) throw SemanticError(std::move(violations));
    return config;
}

std::string serialize_configuration(const BrauerConfiguration& config) {
    std::ostringstream out;
    out << "{\n";

    out << "  \"vertices\": " << quoted_list(config.vertices) << ",\n";

    // Multiplicity: declared vertices first in declaration order, then any
    // undeclared keys; entries with mu == 1 are the default and are dropped.
    std::vector<std::pair<VertexId, std::int64_t>> mu_entries;
    for (const VertexId& vertex : config.vertices) {
        auto it = config.multiplicity.find(vertex);
        if (it != config.multiplicity.end() && it->second != 1) mu_entries.push_back(*it);
    }
    for (const auto& [vertex, value] : config.multiplicity) {
        if (value == 1) continue;
        if (!config.has_vertex(vertex)) mu_entries.emplace_back(vertex, value);
    }
    out << "  \"multiplicity\": {";
    for (std::size_t i = 0; i < mu_entries.size(); ++i) {
        if (i > 0) out << ", ";
        out << quote(mu_entries[i].first.name) << ": " << mu_entries[i].second;
    }
    out << "},\n";

    if (config.polygons.empty()) {
        out << "  \"polygons\": {},\n";
    } else {
        out << "  \"polygons\": {\n";
        for (std::size_t i = 0; i < config.polygons.size(); ++i) {
            const Polygon& polygon = config.polygons[i];
            out << "    " << quote(polygon.id().name) << ": " << quoted_list(polygon.members())
                << (i + 1 < config.polygons.size() ? ",\n" : "\n");
        }
        out << "  },\n";
    }

    std::vector<const SuccessorSequence*> sequences;
    for (const VertexId& vertex : config.vertices) {
        auto it = config.orientation.find(vertex);
        if (it != config.orientation.end()) sequences.push_back(&it->second);
    }
    for (const auto& [vertex, sequence] : config.orientation) {
        if (!config.has_vertex(vertex)) sequences.push_back(&sequence);
    }
    if (sequences.empty()) {
        out << "  \"orientation\": {}\n";
    } else {
        out << "  \"orientation\": {\n";
        for (std::size_t i = 0; i < sequences.size(); ++i) {
            out << "    " << quote(sequences[i]->vertex.name) << ": "
                << quoted_list(sequences[i]->polygons)
                << (i + 1 < sequences.size() ? ",\n" : "\n");
        }
        out << "  }\n";
    }

    out << "}\n";
    return out.str();
}

BrauerConfiguration load_configuration_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw FileError(path);
    return parse_configuration(buffer.str());
}

}  // namespace brauer
