#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kron/criteria.hpp"
#include "kron/errors.hpp"
#include "kron/extract.hpp"
#include "kron/hom.hpp"
#include "kron/invariants.hpp"
#include "kron/json_io.hpp"
#include "kron/pencil.hpp"
#include "kron/rank.hpp"
#include "kron/verify.hpp"

using namespace kron;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write file '" + out_path + "'");
    out << text;
}

// Representation files hold either schema; pencil inputs are reduced to
// their invariants on the way in.
KroneckerInvariants load_invariants(const std::string& path) {
    const std::string text = read_file(path);
    if (detect_json_kind(text) == JsonKind::Pencil) {
        return extract_invariants(pencil_from_json(text));
    }
    return invariants_from_json(text);
}

DecideMode parse_mode(const std::string& name) {
    if (name == "theorem") return DecideMode::Theorem;
    if (name == "generic") return DecideMode::Generic;
    return DecideMode::Both;
}

const char* mode_name(DecideMode mode) {
    switch (mode) {
        case DecideMode::Theorem: return "theorem";
        case DecideMode::Generic: return "generic";
        default: return "both";
    }
}

nlohmann::json report_json(const EmbedReport& rep) {
    nlohmann::json j;
    j["trials"] = rep.component1.trials;
    j["prime"] = std::to_string(rep.component1.prime);
    j["seed"] = std::to_string(rep.seed);
    j["needed1"] = rep.needed1;
    j["needed2"] = rep.needed2;
    j["sampled1"] = rep.component1.sampled_rank;
    j["sampled2"] = rep.component2.sampled_rank;
    return j;
}

int emit_verdict(const Verdict& v, const char* key) {
    nlohmann::json j;
    j[key] = v.embeds;
    j["mode"] = mode_name(v.mode);
    if (v.theorem_verdict) j["theorem_verdict"] = *v.theorem_verdict;
    if (v.report) j["report"] = report_json(*v.report);
    std::cout << j.dump(2) << "\n";
    return v.embeds ? 0 : 1;
}

nlohmann::json parse_args_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed JSON document");
    if (!doc.is_object()) throw ParseError("rank arguments must be an object");
    return doc;
}

std::vector<int> args_part_list(const nlohmann::json& doc,
                                const std::string& field) {
    if (!doc.contains(field) || !doc[field].is_array()) {
        throw ParseError("field '" + field + "': expected an array");
    }
    std::vector<int> parts;
    for (const auto& entry : doc[field]) {
        if (!entry.is_number_integer()) {
            throw ParseError("field '" + field + "': expected integer entries");
        }
        parts.push_back(entry.get<int>());
    }
    return parts;
}

std::vector<long long> args_size_list(const nlohmann::json& doc,
                                      const std::string& field) {
    std::vector<long long> sizes;
    for (int p : args_part_list(doc, field)) sizes.push_back(p);
    return sizes;
}

// Regular parts arrive in the same shape as the "regular" field of an
// invariants document, so the strict parser does the validation.
RegularPart args_regular(const nlohmann::json& doc, const std::string& field) {
    if (!doc.contains(field)) {
        throw ParseError("field '" + field + "': missing");
    }
    nlohmann::json wrapped;
    wrapped["regular"] = doc[field];
    return invariants_from_json(wrapped.dump()).regular;
}

long long evaluate_rank(const std::string& kind, const std::string& args_text) {
    const nlohmann::json args = parse_args_json(args_text);
    if (kind == "pp" || kind == "pp1") {
        return rank_pp(args_part_list(args, "a"), args_part_list(args, "d"),
                       kind == "pp1" ? 1 : 2);
    }
    if (kind == "ii" || kind == "ii2") {
        return rank_ii(args_part_list(args, "c"), args_part_list(args, "f"),
                       kind == "ii2" ? 2 : 1);
    }
    if (kind == "rr") {
        return rank_rr(args_regular(args, "target"),
                       args_regular(args, "sub"));
    }
    return rank_block_triangular(args_size_list(args, "rows"),
                                 args_size_list(args, "cols"));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kronecker pencil invariants, embeddings, and generic ranks"};
    app.require_subcommand(1);

    std::string in_a, in_b, out_path;
    std::string mode = "both";
    std::string suite, kind, args_text;
    int trials = kDefaultTrials;
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = kDefaultSeed;
    int max_dim = 0;
    long long count = 0;
    int ret = 0;

    const auto add_sampling = [&](CLI::App* cmd) {
        cmd->add_option("--trials", trials, "Random samples per question");
        cmd->add_option("--prime", prime, "Modulus for sampling, must be prime");
        cmd->add_option("--seed", seed, "Random seed");
    };

    CLI::App* canonical = app.add_subcommand(
        "canonical", "Build the canonical pencil of an invariant set");
    canonical->add_option("--invariants", in_a, "Invariants JSON file")
        ->required();
    canonical->add_option("-o,--output", out_path,
                          "Output file, standard output when omitted");
    canonical->callback([&] {
        const KroneckerInvariants inv = invariants_from_json(read_file(in_a));
        write_output(pencil_to_json(canonical_pencil(inv)), out_path);
    });

    CLI::App* invariants = app.add_subcommand(
        "invariants", "Extract the invariants of a pencil");
    invariants->add_option("--pencil", in_a, "Pencil JSON file")->required();
    invariants->callback([&] {
        const Pencil p = pencil_from_json(read_file(in_a));
        std::cout << invariants_to_json(extract_invariants(p));
    });

    CLI::App* embeds = app.add_subcommand(
        "embeds", "Decide whether one representation embeds in another");
    embeds->add_option("--sub", in_a, "Candidate subrepresentation file")
        ->required();
    embeds->add_option("--into", in_b, "Ambient representation file")
        ->required();
    embeds->add_option("--mode", mode, "Decision route")
        ->check(CLI::IsMember({"theorem", "generic", "both"}));
    add_sampling(embeds);
    embeds->callback([&] {
        const Verdict v =
            decide(load_invariants(in_a), load_invariants(in_b),
                   parse_mode(mode), trials, prime, seed);
        ret = emit_verdict(v, "embeds");
    });

    CLI::App* factor = app.add_subcommand(
        "factor", "Decide whether one representation is a factor of another");
    factor->add_option("--quotient", in_a, "Candidate factor file")->required();
    factor->add_option("--of", in_b, "Ambient representation file")->required();
    factor->add_option("--mode", mode, "Decision route")
        ->check(CLI::IsMember({"theorem", "generic", "both"}));
    add_sampling(factor);
    factor->callback([&] {
        const Verdict v =
            is_factor(load_invariants(in_a), load_invariants(in_b),
                      parse_mode(mode), trials, prime, seed);
        ret = emit_verdict(v, "factors");
    });

    CLI::App* homdim = app.add_subcommand(
        "homdim", "Dimension of the homomorphism space between two representations");
    homdim->add_option("--from", in_a, "Source representation file")->required();
    homdim->add_option("--to", in_b, "Target representation file")->required();
    homdim->callback([&] {
        const KroneckerInvariants from = load_invariants(in_a);
        const KroneckerInvariants to = load_invariants(in_b);
        const HomBasis basis =
            hom_basis(canonical_pencil(from), canonical_pencil(to));
        nlohmann::json j;
        j["dimension"] = basis.dimension();
        const GenericHom g = structured_generic_hom(from, to);
        if (g.fully_structured) {
            j["structured_parameters"] = param_count(g);
        } else {
            j["structured_parameters"] = nullptr;
        }
        std::cout << j.dump(2) << "\n";
    });

    CLI::App* rank = app.add_subcommand(
        "rank", "Evaluate a closed-form generic rank");
    rank->add_option("--kind", kind, "Formula family")
        ->required()
        ->check(CLI::IsMember({"pp", "pp1", "ii", "ii2", "rr", "blocktri"}));
    rank->add_option("--args", args_text, "Formula arguments as inline JSON")
        ->required();
    rank->callback([&] {
        nlohmann::json j;
        j["kind"] = kind;
        j["rank"] = evaluate_rank(kind, args_text);
        std::cout << j.dump(2) << "\n";
    });

    CLI::App* verify = app.add_subcommand(
        "verify", "Run a formula-versus-sampling agreement suite");
    verify->add_option("--suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-dim", max_dim,
                       "Size bound, suite default when omitted");
    verify->add_option("--count", count,
                       "Randomized instances, suite default when omitted");
    add_sampling(verify);
    verify->callback([&] {
        VerifyOptions o;
        o.max_dim = max_dim;
        o.count = count;
        o.trials = trials;
        o.prime = prime;
        o.seed = seed;
        const SuiteResult r = run_suite(suite, o);
        nlohmann::json j;
        j["suite"] = r.suite;
        j["max_dim"] = r.max_dim;
        j["instances"] = r.instances;
        j["embed_checks"] = r.embed_checks;
        j["embed_disagreements"] = r.embed_disagreements;
        j["rank_checks"] = r.rank_checks;
        j["rank_disagreements"] = r.rank_disagreements;
        j["ok"] = r.ok();
        j["trials"] = r.trials;
        j["prime"] = std::to_string(r.prime);
        j["seed"] = std::to_string(r.seed);
        j["failures"] = r.failures;
        std::cout << j.dump(2) << "\n";
        ret = r.ok() ? 0 : 1;
    });

    CLI::App* subfactor = app.add_subcommand(
        "subfactor", "Search for a common intermediate representation");
    subfactor->add_option("--sub", in_a, "Representation to realize as a subfactor")
        ->required();
    subfactor->add_option("--of", in_b, "Ambient representation file")
        ->required();
    subfactor->add_option("--max-total-dim", max_dim,
                          "Search bound, ambient total dimension when omitted");
    add_sampling(subfactor);
    subfactor->callback([&] {
        const KroneckerInvariants n = load_invariants(in_a);
        const KroneckerInvariants m = load_invariants(in_b);
        const int bound =
            max_dim > 0 ? max_dim : static_cast<int>(total_dimension(m));
        const SubfactorResult r =
            subfactor_search(n, m, bound, trials, prime, seed);
        nlohmann::json j;
        j["found"] = r.found;
        if (r.witness) {
            j["witness"] = nlohmann::json::parse(invariants_to_json(*r.witness));
        } else {
            j["witness"] = nullptr;
        }
        j["candidates_checked"] = r.candidates_checked;
        j["max_total_dim"] = bound;
        j["trials"] = trials;
        j["prime"] = std::to_string(prime);
        j["seed"] = std::to_string(seed);
        std::cout << j.dump(2) << "\n";
        ret = r.found ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    } catch (const DecisionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const CriterionUnavailable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalInconsistency& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return ret;
}
