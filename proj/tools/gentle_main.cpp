#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gentle/boundary.hpp"
#include "gentle/complex.hpp"
#include "gentle/errors.hpp"
#include "gentle/field.hpp"
#include "gentle/formality.hpp"
#include "gentle/hochschild.hpp"
#include "gentle/json_io.hpp"
#include "gentle/naming.hpp"
#include "gentle/structure.hpp"

using nlohmann::ordered_json;
using namespace gentle;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GentleAlgebra load(const std::string& path) {
    return validate_gentle(parse_quiver_json(slurp(path)));
}

struct Output {
    std::string format = "text";
    void emit(const ordered_json& doc, const std::string& text) const {
        if (format == "json")
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << text;
    }
};

std::string kind_name(BoundaryCycle::Kind k) {
    switch (k) {
        case BoundaryCycle::Kind::Generic: return "generic";
        case BoundaryCycle::Kind::Unmarked: return "unmarked";
        case BoundaryCycle::Kind::FullyMarked: return "fully-marked";
    }
    return "?";
}

ordered_json cycle_json(const GentleAlgebra& A, const BoundaryCycle& c) {
    ordered_json j;
    j["kind"] = kind_name(c.kind);
    if (c.kind == BoundaryCycle::Kind::Generic) {
        j["stops"] = c.stops();
        ordered_json segs = ordered_json::array();
        for (size_t i = 0; i < c.lives.size(); ++i) {
            ordered_json s;
            s["live"] = word_to_string(A, c.lives[i]);
            s["chain"] = word_to_string(A, c.chains[i]);
            segs.push_back(s);
        }
        j["segments"] = segs;
    } else {
        j["stops"] = c.infinite_stops() ? ordered_json("inf") : ordered_json(c.stops());
        j["cycle"] = word_to_string(A, c.cycle->primitive);
    }
    j["winding"] = c.winding();
    return j;
}

ordered_json aag_json(const AAGInvariant& phi) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, mult] : phi.entries) {
        ordered_json e;
        e["n"] = key.first ? ordered_json("inf") : ordered_json(key.second.first);
        e["m"] = key.second.second;
        e["multiplicity"] = mult;
        arr.push_back(e);
    }
    return arr;
}

std::string scalar_str(const Scalar& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"exact invariants and Hochschild cohomology of graded gentle quivers"};
    app.require_subcommand(1);
    Output out;
    std::string field_text = "q";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", out.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--field", field_text, "coefficient field: q | fp:<prime>");
    };

    std::string file_a, file_b, class_x, class_y;
    int nmax = 6, dmin = 0, dmax = 0, n_opt = 0, d_opt = 0;
    bool d_given = false;
    std::optional<int> cap;
    int cap_value = -1;

    auto* validate_cmd = app.add_subcommand("validate", "check the gentle axioms");
    validate_cmd->add_option("quiver", file_a)->required();
    add_common(validate_cmd);

    auto* invariants_cmd =
        app.add_subcommand("invariants", "surface invariants and boundary cycles");
    invariants_cmd->add_option("quiver", file_a)->required();
    add_common(invariants_cmd);

    auto* aag_cmd = app.add_subcommand("aag", "Avella-Alaminos--Geiss invariant");
    aag_cmd->add_option("quiver", file_a)->required();
    add_common(aag_cmd);

    auto* compare_cmd =
        app.add_subcommand("compare", "necessary-condition derived-equivalence test");
    compare_cmd->add_option("quiver", file_a)->required();
    compare_cmd->add_option("other", file_b)->required();
    add_common(compare_cmd);

    auto* oracle_cmd =
        app.add_subcommand("oracle", "cochain-complex cohomology dimension table");
    oracle_cmd->add_option("quiver", file_a)->required();
    oracle_cmd->add_option("--nmax", nmax);
    oracle_cmd->add_option("--dmin", dmin);
    oracle_cmd->add_option("--dmax", dmax);
    auto* oracle_d = oracle_cmd->add_option("--d", d_opt, "single internal degree");
    oracle_cmd->add_option("--cap", cap_value, "live-path length cap");
    add_common(oracle_cmd);

    auto* dims_cmd = app.add_subcommand("dims", "closed-form basis dimension table");
    dims_cmd->add_option("quiver", file_a)->required();
    dims_cmd->add_option("--nmax", nmax);
    dims_cmd->add_option("--dmin", dmin);
    dims_cmd->add_option("--dmax", dmax);
    auto* dims_d = dims_cmd->add_option("--d", d_opt, "single internal degree");
    add_common(dims_cmd);

    auto* basis_cmd = app.add_subcommand("basis", "basis classes of one bidegree");
    basis_cmd->add_option("quiver", file_a)->required();
    basis_cmd->add_option("--n", n_opt)->required();
    basis_cmd->add_option("--d", d_opt)->required();
    add_common(basis_cmd);

    auto* cup_cmd = app.add_subcommand("cup", "cup product of two basis classes");
    cup_cmd->add_option("quiver", file_a)->required();
    cup_cmd->add_option("x", class_x)->required();
    cup_cmd->add_option("y", class_y)->required();
    add_common(cup_cmd);

    auto* bracket_cmd =
        app.add_subcommand("bracket", "Gerstenhaber bracket of two basis classes");
    bracket_cmd->add_option("quiver", file_a)->required();
    bracket_cmd->add_option("x", class_x)->required();
    bracket_cmd->add_option("y", class_y)->required();
    add_common(bracket_cmd);

    auto* presentation_cmd =
        app.add_subcommand("presentation", "generators and relations of HH");
    presentation_cmd->add_option("quiver", file_a)->required();
    add_common(presentation_cmd);

    auto* formality_cmd = app.add_subcommand("formality", "intrinsic formality verdict");
    formality_cmd->add_option("quiver", file_a)->required();
    formality_cmd->add_option("--nmax", nmax);
    add_common(formality_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (cap_value >= 0) cap = cap_value;
    Field F = Field::parse(field_text);

    if (validate_cmd->parsed()) {
        GentleAlgebra A = load(file_a);
        ordered_json j;
        j["valid"] = true;
        j["vertices"] = A.num_vertices();
        j["arrows"] = A.num_arrows();
        j["relations"] = static_cast<int>(A.q.relations.size());
        j["smooth"] = is_smooth(A);
        j["proper"] = is_proper(A);
        std::ostringstream t;
        t << "valid gentle quiver: " << A.num_vertices() << " vertices, "
          << A.num_arrows() << " arrows, " << A.q.relations.size() << " relations\n"
          << "homologically smooth: " << (is_smooth(A) ? "yes" : "no")
          << ", proper: " << (is_proper(A) ? "yes" : "no") << "\n";
        out.emit(j, t.str());
    } else if (invariants_cmd->parsed()) {
        GentleAlgebra A = load(file_a);
        SurfaceInvariants s = surface_invariants(A);
        ordered_json j;
        j["boundary_components"] = s.boundary_components;
        j["euler_characteristic"] = s.euler_characteristic;
        j["genus"] = s.genus;
        j["smooth"] = is_smooth(A);
        j["proper"] = is_proper(A);
        j["cycles"] = ordered_json::array();
        for (const BoundaryCycle& c : boundary_cycles(A)) j["cycles"].push_back(cycle_json(A, c));
        j["aag"] = aag_json(aag_invariant(A));
        std::ostringstream t;
        t << "surface: b=" << s.boundary_components << " chi=" << s.euler_characteristic
          << " g=" << s.genus << "\n";
        for (const BoundaryCycle& c : boundary_cycles(A)) {
            t << "  " << kind_name(c.kind) << " cycle, n(c)="
              << (c.infinite_stops() ? std::string("inf") : std::to_string(c.stops()))
              << ", winding=" << c.winding();
            if (c.kind == BoundaryCycle::Kind::Generic) {
                t << ", segments:";
                for (size_t i = 0; i < c.lives.size(); ++i)
                    t << " (q=" << word_to_string(A, c.lives[i])
                      << ", p=" << word_to_string(A, c.chains[i]) << ")";
            } else {
                t << ", cycle " << word_to_string(A, c.cycle->primitive);
            }
            t << "\n";
        }
        out.emit(j, t.str());
    } else if (aag_cmd->parsed()) {
        GentleAlgebra A = load(file_a);
        AAGInvariant phi = aag_invariant(A);
        ordered_json j;
        j["aag"] = aag_json(phi);
        std::ostringstream t;
        t << "phi_A = {";
        bool first = true;
        for (const auto& [key, mult] : phi.entries) {
            for (int i = 0; i < mult; ++i) {
                if (!first) t << ", ";
                first = false;
                t << "(" << (key.first ? std::string("inf") : std::to_string(key.second.first))
                  << "," << key.second.second << ")";
            }
        }
        t << "}\n";
        out.emit(j, t.str());
    } else if (compare_cmd->parsed()) {
        GentleAlgebra A = load(file_a), B = load(file_b);
        ComparisonResult r = compare_invariants(A, B);
        ordered_json j;
        j["possibly_equivalent"] = r.possibly_equivalent;
        j["witness"] = r.witness;
        j["note"] = "necessary condition only";
        std::ostringstream t;
        if (r.possibly_equivalent)
            t << "possibly equivalent (all compared invariants agree; necessary "
                 "condition only)\n";
        else
            t << "not derived equivalent: " << r.witness << "\n";
        out.emit(j, t.str());
    } else if (oracle_cmd->parsed() || dims_cmd->parsed()) {
        GentleAlgebra A = load(file_a);
        if ((oracle_cmd->parsed() ? oracle_d : dims_d)->count()) {
            dmin = d_opt;
            dmax = d_opt;
        }
        ordered_json j;
        j["field"] = F.name();
        j["rows"] = ordered_json::array();
        std::ostringstream t;
        t << "dim HH^{n,d} over " << F.name() << "\n";
        for (int d = dmax; d >= dmin; --d) {
            t << "d=" << d << ":";
            for (int n = 0; n <= nmax; ++n) {
                ordered_json row;
                row["n"] = n;
                row["d"] = d;
                if (oracle_cmd->parsed()) {
                    DimResult r = cohomology_dim(A, F, n, d, cap);
                    row["dim"] = r.dim;
                    row["exact"] = r.exact;
                    t << " " << r.dim << (r.exact ? "" : "+");
                } else {
                    BasisResult b = basis(A, F, n, d);
                    if (b.finite()) {
                        row["dim"] = static_cast<long long>(b.classes.size());
                        t << " " << b.classes.size();
                    } else {
                        row["dim"] = "inf";
                        t << " inf";
                    }
                }
                j["rows"].push_back(row);
            }
            t << "\n";
        }
        out.emit(j, t.str());
    } else if (basis_cmd->parsed()) {
        GentleAlgebra A = load(file_a);
        BasisResult b = basis(A, F, n_opt, d_opt);
        ordered_json j;
        j["n"] = n_opt;
        j["d"] = d_opt;
        j["classes"] = ordered_json::array();
        std::ostringstream t;
        t << "basis of HH^{" << n_opt << "," << d_opt << "} over " << F.name() << ":\n";
        for (const HHClass& c : b.classes) {
            j["classes"].push_back(class_name(A, c));
            t << "  " << class_name(A, c) << "\n";
        }
        j["families"] = ordered_json::array();
        for (const ClassFamily& fam : b.families) {
            std::string desc = std::string(fam.s == 0 ? "N0" : "N1") + "[" +
                               word_to_string(A, fam.primitive.primitive) +
                               "^m] for all m >= 1";
            j["families"].push_back(desc);
            t << "  family: " << desc << "\n";
        }
        out.emit(j, t.str());
    } else if (cup_cmd->parsed() || bracket_cmd->parsed()) {
        GentleAlgebra A = load(file_a);
        HHClass x = parse_class(A, F, class_x);
        HHClass y = parse_class(A, F, class_y);
        StructureCache S(A, F);
        HHExpression r = cup_cmd->parsed() ? S.cup(HHExpression(x), HHExpression(y))
                                           : S.bracket(HHExpression(x), HHExpression(y));
        ordered_json j;
        j["x"] = class_name(A, x);
        j["y"] = class_name(A, y);
        j["result"] = expression_string(A, F, r);
        j["terms"] = ordered_json::array();
        for (const auto& [cls, coeff] : r.terms()) {
            ordered_json term;
            term["class"] = class_name(A, cls);
            term["coefficient"] = scalar_str(coeff);
            j["terms"].push_back(term);
        }
        out.emit(j, expression_string(A, F, r) + "\n");
    } else if (presentation_cmd->parsed()) {
        GentleAlgebra A = load(file_a);
        Presentation P = hh_presentation(A, F);
        ordered_json j;
        j["generators"] = ordered_json::array();
        std::ostringstream t;
        t << "generators:\n";
        for (const auto& g : P.generators) {
            ordered_json jg;
            jg["name"] = g.name;
            jg["degree"] = g.degree;
            jg["description"] = g.description;
            j["generators"].push_back(jg);
            t << "  " << g.name << " (degree " << g.degree << "): " << g.description
              << "\n";
        }
        j["relations"] = P.relations;
        t << "relations:\n";
        for (const std::string& r : P.relations) t << "  " << r << "\n";
        if (P.relations.empty()) t << "  (none)\n";
        out.emit(j, t.str());
    } else if (formality_cmd->parsed()) {
        GentleAlgebra A = load(file_a);
        FormalityVerdict v = formality(A, F, nmax);
        ordered_json j;
        std::string verdict = v.surface_verdict == FormalityVerdict::Surface::Formal
                                  ? "formal"
                                  : (v.surface_verdict == FormalityVerdict::Surface::NotFormal
                                         ? "not-formal"
                                         : "outside-hypothesis");
        j["surface_verdict"] = verdict;
        j["witnesses"] = v.witnesses;
        j["kadeishvili"] = ordered_json::object();
        j["kadeishvili"]["obstruction_dims"] = ordered_json::object();
        for (const auto& [n, dim] : v.obstruction_dims)
            j["kadeishvili"]["obstruction_dims"][std::to_string(n)] = dim;
        j["kadeishvili"]["sufficient_formality"] = v.sufficient_formality;
        j["verdicts_disagree"] = v.verdicts_disagree;
        j["disagreement"] = v.disagreement;
        std::ostringstream t;
        t << "surface criterion: " << verdict << "\n";
        for (const std::string& w : v.witnesses) t << "  witness: " << w << "\n";
        t << "kadeishvili obstruction dims (n -> dim HH^{n,2-n}):";
        for (const auto& [n, dim] : v.obstruction_dims) t << " " << n << "->" << dim;
        t << "\nsufficient for formality (window): "
          << (v.sufficient_formality ? "yes" : "no") << "\n";
        if (v.verdicts_disagree) t << "NOTE: " << v.disagreement << "\n";
        out.emit(j, t.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const needs_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
