#include "qshuffle/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qshuffle/catalan.hpp"
#include "qshuffle/pbw.hpp"
#include "qshuffle/relations.hpp"
#include "qshuffle/shuffle.hpp"

namespace qshuffle::cli {

namespace {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(text));
        }
        const Int num(text.substr(0, slash));
        const Int den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational '" + text + "' (expected p or p/q)");
    }
}

std::string int_list(const std::vector<int>& values) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            os << ",";
        }
        os << values[i];
    }
    os << ")";
    return os.str();
}

void print_element(const AlgElt& e, const std::string& format) {
    if (format == "json") {
        std::cout << e.to_json().dump() << "\n";
    } else if (format == "latex") {
        std::cout << e.latex() << "\n";
    } else {
        std::cout << e.str() << "\n";
    }
}

int finish_report(VerificationReport report, const std::string& report_path) {
    report.sort_canonical();
    report.print(std::cout);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "cannot open report file: " << report_path << "\n";
            return 2;
        }
        report.write_jsonl(out);
    }
    if (report.fail_count() > 0) {
        return 1;
    }
    if (report.inconclusive_count() > 0) {
        return 2;
    }
    return 0;
}

}  // namespace

int run(std::vector<std::string> args) {
    CLI::App app{"exact computations in the two-letter q-shuffle algebra"};
    app.require_subcommand(1);

    std::size_t memo_cap = 0;
    app.add_option("--memo-cap", memo_cap, "shuffle memo table entry cap");

    // expand
    auto* expand = app.add_subcommand("expand", "q-shuffle product of two words");
    std::string expand_u, expand_v, expand_format = "text";
    expand->add_option("u", expand_u, "first word over {x,y}, or 1")->required();
    expand->add_option("v", expand_v, "second word over {x,y}, or 1")->required();
    expand->add_option("--format", expand_format, "text|json|latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    // catalan
    auto* catalan = app.add_subcommand("catalan", "list Catalan words of length 2n");
    int catalan_n = 0;
    bool catalan_profiles = false, catalan_coeffs = false;
    std::string catalan_format = "text";
    catalan->add_option("--n", catalan_n, "half-length n")->required()->check(CLI::NonNegativeNumber);
    catalan->add_flag("--profiles", catalan_profiles, "include elevation and profile columns");
    catalan->add_flag("--coeffs", catalan_coeffs, "include the coefficient C(w)");
    catalan->add_option("--format", catalan_format, "text|json|latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    // profile
    auto* prof = app.add_subcommand("profile", "profile data of a Catalan word");
    std::string prof_word, prof_from, prof_format = "text";
    prof->add_option("word", prof_word, "Catalan word over {x,y}, or 1");
    prof->add_option("--from", prof_from, "comma-separated profile, e.g. 0,2,0,1,0");
    prof->add_option("--format", prof_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // pbw
    auto* pbw = app.add_subcommand("pbw", "image of a PBW generator in V");
    std::string pbw_kind, pbw_method = "recursive", pbw_format = "text";
    int pbw_n = 0;
    pbw->add_option("--kind", pbw_kind, "a0|a1|delta")
        ->required()
        ->check(CLI::IsMember({"a0", "a1", "delta"}));
    pbw->add_option("--n", pbw_n, "family index")->required()->check(CLI::NonNegativeNumber);
    pbw->add_option("--method", pbw_method, "recursive|closed")
        ->check(CLI::IsMember({"recursive", "closed"}));
    pbw->add_option("--format", pbw_format, "text|json|latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run identity verification suites");
    std::string suite = "all", report_path, q0_text = "2";
    int max_n = 5, max_ij = 3, degree = 4;
    verify->add_option("--suite", suite, "all|theorem|serre|catalan|section3|independence")
        ->check(CLI::IsMember({"all", "theorem", "serre", "catalan", "section3", "independence"}));
    verify->add_option("--max-n", max_n, "index bound for the n-indexed checks");
    verify->add_option("--max-ij", max_ij, "index bound for the (i,j)-indexed checks");
    verify->add_option("--degree", degree, "top total degree for independence evidence");
    verify->add_option("--q0", q0_text, "rational evaluation point, e.g. 2 or 5/3");
    verify->add_option("--report", report_path, "write one JSON record per check to this file");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (memo_cap > 0) {
        set_shuffle_memo_cap(memo_cap);
    }

    try {
        if (expand->parsed()) {
            const AlgElt u = AlgElt::from_word(Word::parse(expand_u));
            const AlgElt v = AlgElt::from_word(Word::parse(expand_v));
            print_element(shuffle(u, v), expand_format);
            return 0;
        }

        if (catalan->parsed()) {
            const std::vector<Word> words = enumerate_catalan(catalan_n);
            if (catalan_format == "json") {
                nlohmann::json rows = nlohmann::json::array();
                for (const Word& w : words) {
                    nlohmann::json row{{"word", w.str()}};
                    if (catalan_profiles) {
                        row["elevation"] = elevation(w);
                        row["profile"] = profile(w).entries();
                    }
                    if (catalan_coeffs) {
                        row["coeff"] = cw_elevation(w).to_json();
                    }
                    rows.push_back(std::move(row));
                }
                nlohmann::json out{{"n", catalan_n},
                                   {"count", words.size()},
                                   {"words", std::move(rows)}};
                std::cout << out.dump() << "\n";
            } else {
                for (const Word& w : words) {
                    std::cout << w.str();
                    if (catalan_profiles) {
                        std::cout << "  elevation=" << int_list(elevation(w))
                                  << "  profile=" << profile(w).str();
                    }
                    if (catalan_coeffs) {
                        if (catalan_format == "latex") {
                            std::cout << "  C=" << latex_brackets(cw_elevation(w));
                        } else {
                            std::cout << "  C=" << cw_elevation(w).str();
                        }
                    }
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (prof->parsed()) {
            if (prof_from.empty() == prof_word.empty()) {
                std::cerr << "profile: give exactly one of <word> or --from\n";
                return 2;
            }
            if (!prof_from.empty()) {
                std::vector<int> entries;
                std::stringstream ss(prof_from);
                std::string piece;
                while (std::getline(ss, piece, ',')) {
                    entries.push_back(std::stoi(piece));
                }
                const Word w = profile_to_word(Profile(entries));
                if (prof_format == "json") {
                    std::cout << nlohmann::json{{"word", w.str()}}.dump() << "\n";
                } else {
                    std::cout << w.str() << "\n";
                }
                return 0;
            }
            const Word w = Word::parse(prof_word);
            const Profile p = profile(w);
            if (prof_format == "json") {
                nlohmann::json out{{"word", w.str()},
                                   {"elevation", elevation(w)},
                                   {"profile", p.entries()},
                                   {"halflength", profile_halflength(p)},
                                   {"coeff", cw_elevation(w).to_json()}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "word       " << w.str() << "\n";
                std::cout << "elevation  " << int_list(elevation(w)) << "\n";
                std::cout << "profile    " << p.str() << "\n";
                std::cout << "halflength " << profile_halflength(p) << "\n";
                std::cout << "C          " << cw_elevation(w).str() << "\n";
            }
            return 0;
        }

        if (pbw->parsed()) {
            PBWLabel label = pbw_kind == "a0"  ? PBWLabel::a0(pbw_n)
                             : pbw_kind == "a1" ? PBWLabel::a1(pbw_n)
                                                : PBWLabel::d(pbw_n);
            const PBWImage image =
                pbw_method == "closed" ? pbw_image_closed(label) : pbw_image_recursive(label);
            print_element(image.value, pbw_format);
            return 0;
        }

        if (verify->parsed()) {
            if (suite == "independence") {
                const Rational q0 = parse_rational(q0_text);
                VerificationReport report;
                for (int d = 0; d <= degree; ++d) {
                    report.merge(independence_evidence(d, q0));
                }
                return finish_report(std::move(report), report_path);
            }
            if (suite == "theorem") {
                return finish_report(verify_main_theorem(max_n), report_path);
            }
            if (suite == "serre") {
                return finish_report(qserre_check(), report_path);
            }
            if (suite == "section3") {
                return finish_report(verify_section3(max_ij, max_ij), report_path);
            }
            VerifyConfig config = VerifyConfig::defaults();
            config.theorem_nmax = max_n;
            config.aver_nmax = max_n;
            config.commutation_imax = max_n;
            config.zeta_nmax = max_n;
            config.section3_imax = max_ij;
            config.section3_jmax = max_ij;
            if (suite == "catalan") {
                config.serre = false;
                config.theorem_nmax = 0;
                config.zeta_nmax = 0;
                config.section3_imax = 0;
                config.section3_jmax = 0;
            }
            return finish_report(verify_all(config), report_path);
        }
    } catch (const ZeroEvaluationPoint& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace qshuffle::cli
