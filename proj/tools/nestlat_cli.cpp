// Command line front end: canonical forms, classification, enumeration.
// Every command reads JSON documents and writes one JSON document to
// stdout. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nestlat/json_io.hpp"
#include "nestlat/oracle.hpp"

using namespace nestlat;

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

Side parse_side(const std::string& s) {
    if (s == "left") return Side::left_row;
    if (s == "right") return Side::right_column;
    throw std::invalid_argument("side must be left or right");
}

std::pair<std::size_t, std::size_t> parse_ambient(const std::string& s) {
    std::size_t x = s.find('x');
    if (x == std::string::npos || x == 0 || x + 1 == s.size())
        throw std::invalid_argument("ambient must look like MxN, e.g. 3x2");
    try {
        return {std::stoull(s.substr(0, x)), std::stoull(s.substr(x + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("ambient must look like MxN, e.g. 3x2");
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string tuple_hash(const NestTuple& t) {
    std::string key;
    for (const auto& r : t.reps) key += r.mat.str() + ";";
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
    return buf;
}

int run_echelon(const std::string& side_str, const std::string& input) {
    Side side = parse_side(side_str);
    Matrix m = matrix_from_json(load_json(input));
    emit(echelon_to_json(echelon_form(m, side)));
    return 0;
}

int run_phi(const std::string& input, const std::string& ambient,
            const std::string& side_str) {
    Side side = parse_side(side_str);
    auto [rows, cols] = parse_ambient(ambient);
    Ring ring = Ring::rationals();
    std::size_t grows = 0, gcols = 0;
    auto gens = generators_from_json(load_json(input), &ring, &grows, &gcols);
    if (grows != rows || gcols != cols)
        throw std::invalid_argument("generator shape disagrees with --ambient");
    FullSubmodule s = phi_from_generators(gens, rows, cols, side, ring);
    Json out;
    out["side"] = side_name(side);
    out["ambient"] = Json{{"m", rows}, {"n", cols}};
    out["rep"] = echelon_to_json(s.rep);
    out["dim"] = dim(s);
    out["principal"] = is_principal(s);
    if (is_principal(s)) out["generator"] = matrix_to_json(principal_generator(s));
    emit(out);
    return 0;
}

int run_nest_phi(const std::string& shape_str, const std::string& input,
                 const std::string& side_str) {
    Side side = parse_side(side_str);
    BlockShape shape = parse_shape(shape_str);
    Ring ring = Ring::rationals();
    std::size_t rows = 0, cols = 0;
    auto gens = generators_from_json(load_json(input), &ring, &rows, &cols);
    if (rows != shape.rows() || cols != shape.cols())
        throw std::invalid_argument("generator shape disagrees with --shape");
    NestTuple t = nest_phi_from_generators(gens, shape, side, ring);
    Json out;
    out["tuple"] = tuple_to_json(t);
    out["principal"] = nest_is_principal(t);
    if (nest_is_principal(t)) out["generator"] = matrix_to_json(nest_principal_generator(t));
    emit(out);
    return 0;
}

int run_classify_bimodule(const std::string& shape_str, const std::string& input) {
    BlockShape shape = parse_shape(shape_str);
    Ring ring = Ring::rationals();
    std::size_t rows = 0, cols = 0;
    auto gens = generators_from_json(load_json(input), &ring, &rows, &cols);
    if (rows != shape.rows() || cols != shape.cols())
        throw std::invalid_argument("generator shape disagrees with --shape");
    BimoduleDescriptor d = bimodule_closure(gens, shape);
    Json out;
    out["descriptor"] = descriptor_to_json(d);
    out["tuple"] = tuple_to_json(descriptor_to_tuple(d, ring));
    out["generator"] = matrix_to_json(bimodule_principal_generator(d, ring));
    emit(out);
    return 0;
}

int run_product(const std::string& shape_str, const std::string& side_str,
                const std::string& left_input, const std::string& right_input,
                bool componentwise) {
    Side side = parse_side(side_str);
    BlockShape shape = parse_shape(shape_str);
    auto load_tuple = [&](const std::string& path) {
        Ring ring = Ring::rationals();
        std::size_t rows = 0, cols = 0;
        auto gens = generators_from_json(load_json(path), &ring, &rows, &cols);
        if (rows != shape.rows() || cols != shape.cols())
            throw std::invalid_argument("generator shape disagrees with --shape");
        return nest_phi_from_generators(gens, shape, side, ring);
    };
    NestTuple a = load_tuple(left_input);
    NestTuple b = load_tuple(right_input);
    NestTuple p = componentwise ? componentwise_star(a, b) : left_ideal_product(a, b);
    Json out;
    out["mode"] = componentwise ? "componentwise" : "ideal";
    out["tuple"] = tuple_to_json(p);
    emit(out);
    return 0;
}

int run_enumerate(const std::string& ring_str, const std::string& shape_str,
                  const std::string& kind_str, const std::string& dot_path) {
    Ring ring = Ring::parse(ring_str);
    BlockShape shape = parse_shape(shape_str);
    oracle::ClosureKind kind;
    if (kind_str == "left")
        kind = oracle::ClosureKind::left;
    else if (kind_str == "right")
        kind = oracle::ClosureKind::right;
    else if (kind_str == "bimodule")
        kind = oracle::ClosureKind::bimodule;
    else
        throw std::invalid_argument("kind must be left, right, or bimodule");

    auto mods = oracle::enumerate_submodules(ring, shape, kind);
    if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw std::invalid_argument("cannot write " + dot_path);
        Side side = kind == oracle::ClosureKind::right ? Side::right_column
                                                       : Side::left_row;
        std::vector<NestTuple> images;
        for (const auto& m : mods)
            images.push_back(nest_phi_from_generators(m.elements, shape, side, ring));
        dot << "digraph lattice {\n  rankdir=BT;\n";
        for (std::size_t i = 0; i < mods.size(); ++i)
            dot << "  n" << i << " [label=\"" << tuple_hash(images[i]) << "\"];\n";
        // covering relations of set inclusion
        for (std::size_t i = 0; i < mods.size(); ++i)
            for (std::size_t j = 0; j < mods.size(); ++j) {
                if (i == j || !mods[i].subset_of(mods[j])) continue;
                bool covering = true;
                for (std::size_t k = 0; covering && k < mods.size(); ++k)
                    if (k != i && k != j && mods[i].subset_of(mods[k]) &&
                        mods[k].subset_of(mods[j]))
                        covering = false;
                if (covering) dot << "  n" << i << " -> n" << j << ";\n";
            }
        dot << "}\n";
    }
    Json out;
    out["count"] = mods.size();
    emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact canonical forms for submodules of matrix and nest modules"};
    app.require_subcommand(1);

    std::string side, input, ambient, shape, ring_str, kind, dot_path;
    std::string left_input, right_input;
    bool componentwise = false;

    CLI::App* echelon = app.add_subcommand("echelon", "canonical echelon form");
    echelon->add_option("--side", side)->required();
    echelon->add_option("--input", input)->required();

    CLI::App* phi = app.add_subcommand("phi", "canonical form of a one-sided submodule");
    phi->add_option("--input", input)->required();
    phi->add_option("--ambient", ambient)->required();
    phi->add_option("--side", side)->required();

    CLI::App* nest_phi = app.add_subcommand("nest-phi",
                                            "canonical tuple of a nest submodule");
    nest_phi->add_option("--shape", shape)->required();
    nest_phi->add_option("--input", input)->required();
    nest_phi->add_option("--side", side)->required();

    CLI::App* classify = app.add_subcommand("classify-bimodule",
                                            "descriptor of a subbimodule");
    classify->add_option("--shape", shape)->required();
    classify->add_option("--input", input)->required();

    CLI::App* product = app.add_subcommand("product", "product of one-sided ideals");
    product->add_option("--shape", shape)->required();
    product->add_option("--side", side)->required();
    product->add_option("--a", left_input)->required();
    product->add_option("--b", right_input)->required();
    product->add_flag("--componentwise", componentwise);

    CLI::App* enumerate = app.add_subcommand("enumerate",
                                             "brute-force submodule enumeration");
    enumerate->add_option("--ring", ring_str)->required();
    enumerate->add_option("--shape", shape)->required();
    enumerate->add_option("--kind", kind)->required();
    enumerate->add_option("--dot", dot_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0) {
            std::cerr << e.what() << "\n";
            return 2;
        }
        return app.exit(e);  // --help and friends
    }

    try {
        if (echelon->parsed()) return run_echelon(side, input);
        if (phi->parsed()) return run_phi(input, ambient, side);
        if (nest_phi->parsed()) return run_nest_phi(shape, input, side);
        if (classify->parsed()) return run_classify_bimodule(shape, input);
        if (product->parsed())
            return run_product(shape, side, left_input, right_input, componentwise);
        if (enumerate->parsed()) return run_enumerate(ring_str, shape, kind, dot_path);
    } catch (const std::domain_error& e) {
        emit(Json{{"error", e.what()}});
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
