#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ackinv/ack.hpp"
#include "ackinv/bench.hpp"
#include "ackinv/bignat.hpp"
#include "ackinv/encoding.hpp"
#include "ackinv/errors.hpp"
#include "ackinv/inverse.hpp"
#include "ackinv/witness.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void print_value(const ackinv::BigNat& value) {
    if (auto small = value.try_to_u64()) {
        std::cout << *small << '\n';
    } else {
        std::cout << value.to_binary_string() << '\n';
    }
}

std::uint64_t parse_u64(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty number");
    std::uint64_t v = 0;
    for (char c : token) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad number: " + token);
        std::uint64_t d = static_cast<std::uint64_t>(c - '0');
        if (v > (UINT64_MAX - d) / 10)
            throw std::invalid_argument("number out of range: " + token);
        v = v * 10 + d;
    }
    return v;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = csv.find(',', start);
        std::string token = csv.substr(start, comma == std::string::npos
                                                  ? std::string::npos
                                                  : comma - start);
        if (token.empty()) throw std::invalid_argument("empty list element");
        out.push_back(parse_u64(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"inverse Ackermann toolkit"};
    app.require_subcommand(1);

    std::string alpha_lit;
    auto* alpha_cmd = app.add_subcommand("alpha", "least k with the diagonal A(k, k) >= m");
    alpha_cmd->add_option("literal", alpha_lit, "m, e.g. 65536, 0x1f, 0b101, pow2(100), tower(3,2)")
        ->required();

    std::uint64_t inv_level = 0;
    std::string inv_lit;
    auto* inv_cmd = app.add_subcommand("inv", "least j with A(k, j) >= m");
    inv_cmd->add_option("-k,--level", inv_level, "level k")->required();
    inv_cmd->add_option("literal", inv_lit, "m")->required();

    std::uint64_t ack_level = 0;
    std::uint64_t ack_arg = 0;
    std::uint64_t ack_max_bits = ackinv::kDefaultBitBudget;
    auto* ack_cmd = app.add_subcommand("ack", "evaluate A(k, n) under a bit budget");
    ack_cmd->add_option("k", ack_level, "level")->required();
    ack_cmd->add_option("n", ack_arg, "argument")->required();
    ack_cmd->add_option("--max-bits", ack_max_bits, "bit budget for intermediate values");

    std::uint64_t lt_level = 0;
    std::uint64_t lt_arg = 0;
    std::string lt_lit;
    auto* lt_cmd = app.add_subcommand("check-lt", "decide A(k, n) < m");
    lt_cmd->add_option("k", lt_level)->required();
    lt_cmd->add_option("n", lt_arg)->required();
    lt_cmd->add_option("literal", lt_lit, "m")->required();

    std::uint64_t gr_level = 0;
    std::uint64_t gr_arg = 0;
    std::string gr_lit;
    auto* gr_cmd = app.add_subcommand("graph", "decide A(k, n) = m");
    gr_cmd->add_option("k", gr_level)->required();
    gr_cmd->add_option("n", gr_arg)->required();
    gr_cmd->add_option("literal", gr_lit, "m")->required();

    std::uint64_t pair_u = 0;
    std::uint64_t pair_v = 0;
    auto* pair_cmd = app.add_subcommand("pair", "diagonal pairing code of (u, v)");
    pair_cmd->add_option("u", pair_u)->required();
    pair_cmd->add_option("v", pair_v)->required();

    std::uint64_t unpair_w = 0;
    auto* unpair_cmd = app.add_subcommand("unpair", "components of a pairing code");
    unpair_cmd->add_option("w", unpair_w)->required();

    std::uint64_t triple_u = 0;
    std::uint64_t triple_v = 0;
    std::uint64_t triple_w = 0;
    auto* triple_cmd = app.add_subcommand("triple", "pairing code of (u, v, w)");
    triple_cmd->add_option("u", triple_u)->required();
    triple_cmd->add_option("v", triple_v)->required();
    triple_cmd->add_option("w", triple_w)->required();

    std::uint64_t untriple_code = 0;
    auto* untriple_cmd = app.add_subcommand("untriple", "components of a triple code");
    untriple_cmd->add_option("code", untriple_code)->required();

    auto* seq_cmd = app.add_subcommand("seq", "sequence codec");
    seq_cmd->require_subcommand(1);
    std::string seq_entries;
    auto* seq_enc = seq_cmd->add_subcommand("encode", "comma-separated naturals to a binary code");
    seq_enc->add_option("entries", seq_entries, "e.g. 4,0,31")->required();
    std::string seq_code;
    auto* seq_dec = seq_cmd->add_subcommand("decode", "binary code to comma-separated naturals");
    seq_dec->add_option("code", seq_code, "binary string, 0b prefix optional")->required();

    auto* wit_cmd = app.add_subcommand("witness", "certificates for A(k, n) < m");
    wit_cmd->require_subcommand(1);
    std::uint64_t wit_k = 0;
    std::uint64_t wit_n = 0;
    std::uint64_t wit_r = 0;
    std::string wit_out;
    auto* wit_build = wit_cmd->add_subcommand("build", "construct a certificate or refute the claim");
    wit_build->add_option("k", wit_k, "level, at least 4")->required();
    wit_build->add_option("n", wit_n, "argument, at least 3")->required();
    wit_build->add_option("--r", wit_r, "threshold: the level-3 inverse of the bound")->required();
    wit_build->add_option("-o,--out", wit_out, "write to a file instead of stdout");
    std::string wit_file;
    auto* wit_verify = wit_cmd->add_subcommand("verify", "check a certificate file");
    wit_verify->add_option("file", wit_file)->required();

    std::string bench_sizes;
    std::uint32_t bench_reps = 5;
    std::uint64_t bench_seed = 1;
    std::string bench_out;
    auto* bench_cmd = app.add_subcommand("bench", "time alpha and the level inverses, CSV output");
    bench_cmd->add_option("--sizes", bench_sizes, "comma-separated bit lengths, ascending")->required();
    bench_cmd->add_option("--reps", bench_reps, "repetitions per size, at least 3");
    bench_cmd->add_option("--seed", bench_seed, "input generator seed");
    bench_cmd->add_option("--out", bench_out, "CSV file path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*alpha_cmd) {
            std::cout << ackinv::alpha(ackinv::parse_literal(alpha_lit)) << '\n';
            return kExitTrue;
        }
        if (*inv_cmd) {
            std::cout << ackinv::inv_ack(inv_level, ackinv::parse_literal(inv_lit)) << '\n';
            return kExitTrue;
        }
        if (*ack_cmd) {
            auto value = ackinv::ack_eval(ack_level, ack_arg, ack_max_bits);
            if (!value) {
                std::cerr << "value exceeds " << ack_max_bits << " bits\n";
                return kExitBudget;
            }
            print_value(*value);
            return kExitTrue;
        }
        if (*lt_cmd) {
            bool holds = ackinv::ack_less_than(lt_level, lt_arg, ackinv::parse_literal(lt_lit));
            std::cout << (holds ? "true" : "false") << '\n';
            return holds ? kExitTrue : kExitFalse;
        }
        if (*gr_cmd) {
            bool holds = ackinv::ack_equals(gr_level, gr_arg, ackinv::parse_literal(gr_lit));
            std::cout << (holds ? "true" : "false") << '\n';
            return holds ? kExitTrue : kExitFalse;
        }
        if (*pair_cmd) {
            std::cout << ackinv::cantor_pair(pair_u, pair_v) << '\n';
            return kExitTrue;
        }
        if (*unpair_cmd) {
            auto [u, v] = ackinv::cantor_unpair(unpair_w);
            std::cout << u << ' ' << v << '\n';
            return kExitTrue;
        }
        if (*triple_cmd) {
            std::cout << ackinv::cantor_triple(triple_u, triple_v, triple_w) << '\n';
            return kExitTrue;
        }
        if (*untriple_cmd) {
            auto parts = ackinv::cantor_untriple(untriple_code);
            std::cout << parts[0] << ' ' << parts[1] << ' ' << parts[2] << '\n';
            return kExitTrue;
        }
        if (*seq_enc) {
            auto code = ackinv::seq_encode(parse_u64_list(seq_entries));
            std::cout << code.to_binary_string() << '\n';
            return kExitTrue;
        }
        if (*seq_dec) {
            std::string text = seq_code;
            if (text.rfind("0b", 0) == 0) text = text.substr(2);
            ackinv::BigNat s = ackinv::BigNat::from_binary(text);
            if (!ackinv::seq_is_valid(s)) {
                std::cerr << "not a valid sequence code\n";
                return kExitFalse;
            }
            auto entries = ackinv::seq_decode(s);
            for (std::size_t i = 0; i < entries.size(); ++i)
                std::cout << (i == 0 ? "" : ",") << entries[i];
            std::cout << '\n';
            return kExitTrue;
        }
        if (*wit_build) {
            auto result = ackinv::build_lt_witness(wit_k, wit_n, wit_r);
            if (result.outcome == ackinv::BuildOutcome::budget_exceeded) {
                std::cerr << "witness label budget exhausted\n";
                return kExitBudget;
            }
            if (result.outcome == ackinv::BuildOutcome::refuted) {
                std::cout << "refuted\n";
                return kExitFalse;
            }
            if (wit_out.empty()) {
                std::cout << result.witness.k << ' ' << result.witness.n << ' '
                          << result.witness.r << '\n'
                          << result.witness.to_seq_code().to_binary_string() << '\n';
            } else {
                ackinv::write_witness_file(wit_out, result.witness);
            }
            return kExitTrue;
        }
        if (*wit_verify) {
            auto file = ackinv::read_witness_file(wit_file);
            bool holds = ackinv::verify_lt_certificate(file.code, file.k, file.n, file.r);
            std::cout << (holds ? "valid" : "invalid") << '\n';
            return holds ? kExitTrue : kExitFalse;
        }
        if (*bench_cmd) {
            auto records = ackinv::run_bench(parse_u64_list(bench_sizes), bench_reps, bench_seed);
            std::ofstream out(bench_out);
            if (!out) throw std::runtime_error("cannot open " + bench_out + " for writing");
            ackinv::write_bench_csv(out, records);
            return kExitTrue;
        }
    } catch (const ackinv::BudgetExceeded& e) {
        std::cerr << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
