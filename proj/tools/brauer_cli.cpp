#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brauer/cartan.hpp"
#include "brauer/checked.hpp"
#include "brauer/document.hpp"
#include "brauer/generator.hpp"
#include "brauer/intervals.hpp"
#include "brauer/oracle.hpp"
#include "brauer/quiver.hpp"

namespace {

using brauer::BrauerConfiguration;
using brauer::CartanMatrix;
using brauer::GeneratorBounds;

std::string pad_left(const std::string& s, std::size_t width) {
    return std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    return s + std::string(width - s.size(), ' ');
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> polygon_names(const BrauerConfiguration& config) {
    std::vector<std::string> names;
    for (const auto& polygon : config.polygons) names.push_back(polygon.id().name);
    return names;
}

std::int64_t entry_sum(const CartanMatrix& matrix) {
    std::int64_t sum = 0;
    for (const auto& row : matrix.entries) {
        for (std::int64_t entry : row) sum = brauer::checked_add(sum, entry);
    }
    return sum;
}

int cmd_validate(const std::string& path) {
    try {
        brauer::load_configuration_file(path);
    } catch (const brauer::SemanticError& error) {
        for (const auto& violation : error.violations) {
            std::cout << brauer::to_string(violation) << "\n";
        }
        return 1;
    }
    std::cout << "ok\n";
    return 0;
}

int cmd_quiver(const std::string& path, const std::string& format) {
    const BrauerConfiguration config = brauer::load_configuration_file(path);
    const brauer::Quiver quiver = brauer::build_quiver(config);
    if (format == "dot") {
        std::cout << "digraph quiver {\n";
        for (const auto& vertex : quiver.vertices()) {
            std::cout << "  " << dot_quote(vertex.polygon.name) << ";\n";
        }
        for (const auto& arrow : quiver.arrows()) {
            std::cout << "  " << dot_quote(arrow.source.polygon.name) << " -> "
                      << dot_quote(arrow.target.polygon.name) << " [label="
                      << dot_quote(arrow.id.label()) << "];\n";
        }
        std::cout << "}\n";
    } else {
        nlohmann::json doc;
        doc["vertices"] = polygon_names(config);
        doc["arrows"] = nlohmann::json::array();
        for (const auto& arrow : quiver.arrows()) {
            doc["arrows"].push_back({{"label", arrow.id.label()},
                                     {"generator", arrow.id.generator.name},
                                     {"ordinal", arrow.id.ordinal},
                                     {"source", arrow.source.polygon.name},
                                     {"target", arrow.target.polygon.name}});
        }
        std::cout << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_cartan(const std::string& path, const std::string& format) {
    const BrauerConfiguration config = brauer::load_configuration_file(path);
    const CartanMatrix matrix = brauer::cartan_matrix(config);
    const std::vector<std::string> names = polygon_names(config);
    const std::size_t n = names.size();

    if (format == "table") {
        std::size_t head_width = 0;
        for (const auto& name : names) head_width = std::max(head_width, name.size());
        std::vector<std::size_t> widths(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            widths[j] = names[j].size();
            for (std::size_t i = 0; i < n; ++i) {
                widths[j] = std::max(widths[j], std::to_string(matrix.entries[i][j]).size());
            }
        }
        std::cout << std::string(head_width, ' ');
        for (std::size_t j = 0; j < n; ++j) std::cout << "  " << pad_left(names[j], widths[j]);
        std::cout << "\n";
        for (std::size_t i = 0; i < n; ++i) {
            std::cout << pad_right(names[i], head_width);
            for (std::size_t j = 0; j < n; ++j) {
                std::cout << "  " << pad_left(std::to_string(matrix.entries[i][j]), widths[j]);
            }
            std::cout << "\n";
        }
    } else if (format == "csv") {
        for (const auto& name : names) std::cout << "," << csv_quote(name);
        std::cout << "\n";
        for (std::size_t i = 0; i < n; ++i) {
            std::cout << csv_quote(names[i]);
            for (std::size_t j = 0; j < n; ++j) std::cout << "," << matrix.entries[i][j];
            std::cout << "\n";
        }
    } else {
        nlohmann::json doc;
        doc["polygons"] = names;
        doc["matrix"] = matrix.entries;
        std::cout << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_dim(const std::string& path) {
    const BrauerConfiguration config = brauer::load_configuration_file(path);
    const std::int64_t dim = brauer::algebra_dimension(config);
    const std::int64_t sum = entry_sum(brauer::cartan_matrix(config));
    std::cout << "dim=" << dim << " cartan_sum=" << sum << (dim == sum ? " ok" : " mismatch")
              << "\n";
    return dim == sum ? 0 : 1;
}

std::string power_string(const brauer::SpecialCycle& cycle, std::int64_t exponent) {
    std::string out;
    for (std::int64_t rep = 0; rep < exponent; ++rep) {
        for (const auto& arrow : cycle.arrows) {
            if (!out.empty()) out += " ";
            out += arrow.id.label();
        }
    }
    return out;
}

int cmd_relations(const std::string& path) {
    const BrauerConfiguration config = brauer::load_configuration_file(path);
    const brauer::Quiver quiver = brauer::build_quiver(config);
    const brauer::RelationSet relations = brauer::generate_relations(config, quiver);

    std::cout << "type one (" << relations.type_one.size() << "):\n";
    for (const auto& [left, right] : relations.type_one) {
        std::cout << "  " << power_string(left.cycle, left.exponent) << " - "
                  << power_string(right.cycle, right.exponent) << "\n";
    }
    std::cout << "type two (" << relations.type_two.size() << "):\n";
    for (const auto& relation : relations.type_two) {
        std::cout << "  " << power_string(relation.cycle, relation.exponent) << " "
                  << relation.first_arrow.id.label() << "\n";
    }
    std::cout << "type three (" << relations.type_three.size() << "):\n";
    for (const auto& [a, b] : relations.type_three) {
        std::cout << "  " << a.id.label() << " " << b.id.label() << "\n";
    }
    return 0;
}

int cmd_check(const std::string& path) {
    const BrauerConfiguration config = brauer::load_configuration_file(path);
    const CartanMatrix closed_form = brauer::cartan_matrix(config);
    const CartanMatrix enumerated = brauer::oracle_cartan_matrix(config);
    if (closed_form == enumerated) {
        std::cout << "ok\n";
        return 0;
    }
    for (std::size_t i = 0; i < closed_form.order(); ++i) {
        for (std::size_t j = 0; j < closed_form.order(); ++j) {
            if (closed_form.entries[i][j] == enumerated.entries[i][j]) continue;
            std::cout << "mismatch at (" << config.polygons[i].id().name << ", "
                      << config.polygons[j].id().name
                      << "): closed_form=" << closed_form.entries[i][j]
                      << " enumeration=" << enumerated.entries[i][j] << "\n";
            return 1;
        }
    }
    return 1;
}

// One fuzz iteration: closed form versus enumeration, symmetry, the
// entry-sum identity against the dimension formula, and the per-interval
// occurrence sums. On failure `message` names the broken property.
bool fuzz_one(const BrauerConfiguration& config, std::string& message) {
    const CartanMatrix matrix = brauer::cartan_matrix(config);
    if (matrix != brauer::oracle_cartan_matrix(config)) {
        message = "closed form disagrees with path enumeration";
        return false;
    }
    for (std::size_t i = 0; i < matrix.order(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (matrix.entries[i][j] != matrix.entries[j][i]) {
                message = "matrix is not symmetric";
                return false;
            }
        }
    }
    if (entry_sum(matrix) != brauer::algebra_dimension(config)) {
        message = "entry sum disagrees with dimension formula";
        return false;
    }
    const brauer::Quiver quiver = brauer::build_quiver(config);
    for (const auto& vertex : config.vertices) {
        if (config.is_truncated(vertex)) continue;
        for (const auto& base : config.polygons_containing(vertex)) {
            const auto diagram = brauer::build_diagram(config, quiver, vertex, base);
            for (const auto& other : config.polygons) {
                if (other.id() == base) continue;
                std::int64_t sum = 0;
                for (std::int64_t count : brauer::interval_occurrences(config, diagram, other.id())) {
                    sum += count;
                }
                if (sum != config.occ(vertex, other.id())) {
                    message = "interval occurrence sums disagree with occ";
                    return false;
                }
            }
        }
    }
    return true;
}

int cmd_fuzz(std::uint64_t seed, std::int64_t count, const std::vector<std::int64_t>& bounds) {
    GeneratorBounds base;
    base.max_vertices = bounds[0];
    base.max_polygons = bounds[1];
    base.max_occ = bounds[2];
    base.max_mu = bounds[3];
    for (std::int64_t i = 0; i < count; ++i) {
        base.seed = seed + static_cast<std::uint64_t>(i);
        const BrauerConfiguration config = brauer::generate_random(base);
        std::string message;
        if (!fuzz_one(config, message)) {
            std::cerr << "error: fuzz: seed " << base.seed << ": " << message << "\n";
            std::cout << brauer::serialize_configuration(config);
            return 1;
        }
    }
    std::cout << "checked " << count << " configuration(s), seeds " << seed << ".."
              << (seed + static_cast<std::uint64_t>(count) - 1) << ", bounds (" << bounds[0] << ","
              << bounds[1] << "," << bounds[2] << "," << bounds[3] << "): all ok\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brauer configuration algebras: quivers, relations, Cartan matrices"};
    app.require_subcommand(1);

    std::string path;
    std::string quiver_format = "dot";
    std::string cartan_format = "table";
    std::uint64_t fuzz_seed = 1;
    std::int64_t fuzz_count = 100;
    std::vector<std::int64_t> fuzz_bounds{5, 5, 3, 3};

    CLI::App* validate = app.add_subcommand("validate", "Check a configuration against the axioms");
    validate->add_option("file", path, "configuration document")->required();

    CLI::App* quiver = app.add_subcommand("quiver", "Emit the induced quiver");
    quiver->add_option("file", path, "configuration document")->required();
    quiver->add_option("--format", quiver_format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));

    CLI::App* cartan = app.add_subcommand("cartan", "Emit the Cartan matrix");
    cartan->add_option("file", path, "configuration document")->required();
    cartan->add_option("--format", cartan_format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    CLI::App* dim = app.add_subcommand("dim", "Print algebra dimension and Cartan entry sum");
    dim->add_option("file", path, "configuration document")->required();

    CLI::App* relations = app.add_subcommand("relations", "Print the generating relations");
    relations->add_option("file", path, "configuration document")->required();

    CLI::App* check = app.add_subcommand("check", "Cross-check the Cartan matrix by enumeration");
    check->add_option("file", path, "configuration document")->required();

    CLI::App* fuzz = app.add_subcommand("fuzz", "Property-check random configurations");
    fuzz->add_option("--seed", fuzz_seed, "first seed (default 1)");
    fuzz->add_option("--count", fuzz_count, "number of configurations (default 100)")
        ->check(CLI::PositiveNumber);
    fuzz->add_option("--bounds", fuzz_bounds,
                     "max vertices, polygons, occurrences, multiplicity (default 5,5,3,3)")
        ->delimiter(',')
        ->expected(4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(path);
        if (app.got_subcommand(quiver)) return cmd_quiver(path, quiver_format);
        if (app.got_subcommand(cartan)) return cmd_cartan(path, cartan_format);
        if (app.got_subcommand(dim)) return cmd_dim(path);
        if (app.got_subcommand(relations)) return cmd_relations(path);
        if (app.got_subcommand(check)) return cmd_check(path);
        if (app.got_subcommand(fuzz)) {
            for (std::int64_t bound : fuzz_bounds) {
                if (bound < 1) {
                    std::cerr << "error: usage: bounds must be positive\n";
                    return 2;
                }
            }
            return cmd_fuzz(fuzz_seed, fuzz_count, fuzz_bounds);
        }
    } catch (const brauer::FileError& error) {
        std::cerr << "error: file: " << error.what() << "\n";
        return 2;
    } catch (const brauer::SyntaxError& error) {
        std::cerr << "error: syntax: " << error.what() << "\n";
        return 1;
    } catch (const brauer::SemanticError& error) {
        std::cerr << "error: semantic: " << error.what() << "\n";
        return 1;
    } catch (const brauer::Error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 2;
}
