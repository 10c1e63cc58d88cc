#include "report.hpp"

#include <fstream>
#include <sstream>

namespace lzb {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string load_source(const std::string& name_or_path) {
    if (const CatalogEntry* e = catalog_find(name_or_path)) return e->text;
    std::ifstream in(name_or_path, std::ios::binary);
    if (!in) throw Error("'" + name_or_path + "' is neither a catalog entry nor a readable file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

std::string kind_str(LeibnizKind k) {
    switch (k) {
        case LeibnizKind::Right: return "right";
        case LeibnizKind::Left: return "left";
        case LeibnizKind::Both: return "right and left";
        default: return "unvalidated";
    }
}

std::string relations_str(const LeibnizAlgebra& a) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) {
            Vector b = a.bracket_basis(i, j);
            if (b.is_zero()) continue;
            os << "  [" << a.name_of(i) << "," << a.name_of(j) << "] = " << combo_str(b, a.names)
               << "\n";
            any = true;
        }
    if (!any) os << "  (abelian)\n";
    return os.str();
}

std::string matrix_block(const std::string& header, const LinearMap& m) {
    // printed row-per-domain-basis-vector, matching the certificate format
    std::ostringstream os;
    os << header << "\n";
    for (size_t j = 0; j < m.domain_dim; ++j) {
        for (size_t i = 0; i < m.codomain_dim; ++i) os << (i ? " " : "") << m.mat.at(i, j).str();
        os << "\n";
    }
    return os.str();
}

CmdResult input_error(const std::string& msg) {
    return {CmdStatus::InputError, "error: " + msg + "\n"};
}

CertMode parse_mode(const std::string& mode) {
    if (mode.empty() || mode == "strict") return CertMode::Strict;
    if (mode == "linear") return CertMode::Linear;
    throw Error("mode must be 'strict' or 'linear'");
}

EpsilonMode parse_eps_mode(const std::string& mode, EpsilonMode dflt) {
    if (mode.empty()) return dflt;
    if (mode == "basis") return EpsilonMode::BasisPairs;
    if (mode == "all") return EpsilonMode::AllElements;
    throw Error("epsilon mode must be 'basis' or 'all'");
}

Certificate load_certificate(const std::string& path, const Pair& p1, const Pair& p2,
                             CertMode mode) {
    CentralQuotient c1 = central_quotient(p1), c2 = central_quotient(p2);
    CertificateFile cf = parse_certificate_file(read_file(path), p1.q.field);
    return certificate_from_file(cf, p1.q.field, c1.qz.alg.dim, c2.qz.alg.dim,
                                 p1.k_lie.space.dim(), p2.k_lie.space.dim(), mode);
}

}  // namespace

LoadedPair load_pair_from_text(const std::string& text, const std::string& ideal_override) {
    LoadedPair lp;
    lp.file = parse_algebra_file(text);
    lp.alg = lp.file.to_algebra();
    LeibnizCheck chk = check_leibniz(lp.alg);
    if (!chk.ok()) {
        const auto& cx = *chk.counterexample;
        throw Error("input algebra fails the Leibniz identity at basis triple (" +
                    lp.alg.name_of(cx.i) + "," + lp.alg.name_of(cx.j) + "," +
                    lp.alg.name_of(cx.k) + ")");
    }
    std::optional<Subspace> ideal;
    if (!ideal_override.empty()) {
        // reuse the combo grammar by parsing a one-line ideal declaration
        std::string synth = "field " +
                            std::string(lp.file.field.is_rationals()
                                            ? "Q"
                                            : "GF " + std::to_string(lp.file.field.p)) +
                            "\ndim " + std::to_string(lp.file.dim) + "\n";
        if (!lp.file.names.empty()) {
            synth += "basis";
            for (const auto& n : lp.file.names) synth += " " + n;
            synth += "\n";
        }
        synth += "ideal " + ideal_override + "\n";
        AlgebraFile parsed = parse_algebra_file(synth);
        ideal = parsed.ideal_subspace();
    } else {
        ideal = lp.file.ideal_subspace();
    }
    lp.pair = ideal ? make_pair(lp.alg, *ideal) : make_full_pair(lp.alg);
    return lp;
}

CmdResult cmd_validate(const std::string& spec) {
    try {
        AlgebraFile af = parse_algebra_file(load_source(spec));
        LeibnizAlgebra alg = af.to_algebra();
        LeibnizCheck chk = check_leibniz(alg);
        if (chk.ok())
            return {CmdStatus::Ok,
                    "OK (satisfies the " + kind_str(chk.kind) + " Leibniz identity)\n"};
        const auto& cx = *chk.counterexample;
        std::ostringstream os;
        os << "FAIL: Leibniz identity fails at basis triple (" << cx.i + 1 << "," << cx.j + 1
           << "," << cx.k + 1 << ") [" << alg.name_of(cx.i) << "," << alg.name_of(cx.j) << ","
           << alg.name_of(cx.k) << "]\n";
        os << "  [x,[y,z]]           = " << combo_str(cx.lhs, alg.names) << "\n";
        os << "  [[x,y],z]-[[x,z],y] = " << combo_str(cx.rhs, alg.names) << "\n";
        return {CmdStatus::Negative, os.str()};
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

CmdResult cmd_invariants(const std::string& spec, const std::string& ideal_override) {
    try {
        LoadedPair lp = load_pair_from_text(load_source(spec), ideal_override);
        const Pair& p = lp.pair;
        std::ostringstream os;
        os << "algebra: dim " << p.q.dim << " over " << p.q.field.str() << " ("
           << kind_str(p.q.kind) << " Leibniz)\n";
        os << "relations:\n" << relations_str(p.q);
        if (p.full())
            os << "pair: m = q (full pair)\n";
        else
            os << "pair ideal m = " << p.m.space.str(p.q.names) << " (dim " << p.m.space.dim()
               << ")\n";
        os << "Z_Lie(m,q)  = " << p.z_lie.str(p.q.names) << " (dim " << p.z_lie.dim() << ")\n";
        os << "[m,q]_Lie   = " << p.k_lie.space.str(p.q.names) << " (dim "
           << p.k_lie.space.dim() << ")\n";
        os << "stem pair:  " << (is_stem(p) ? "yes" : "no") << "\n";
        os << "fingerprint: " << fingerprint(p).str() << "\n";
        return {CmdStatus::Ok, os.str()};
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

CmdResult cmd_stem(const std::string& spec) {
    try {
        LoadedPair lp = load_pair_from_text(load_source(spec));
        std::ostringstream os;
        bool stem = is_stem(lp.pair);
        os << "stem pair: " << (stem ? "yes" : "no") << "\n";
        try {
            StemReduction sr = stem_reduce(lp.pair);
            os << "reducing ideal s = " << sr.s.space.str(lp.pair.q.names) << " (dim "
               << sr.s.space.dim() << ")\n";
            os << "reduced pair: q dim " << sr.reduced.q.dim << ", m dim "
               << sr.reduced.m.space.dim() << "\n";
            os << "reduced relations:\n" << relations_str(sr.reduced.q);
            os << "reduced is stem: " << (is_stem(sr.reduced) ? "yes" : "no") << "\n";
            os << "certificate (input ~ reduced):\n";
            os << matrix_block("alpha:", sr.cert.alpha);
            os << matrix_block("beta:", sr.cert.beta);
            VerifyResult vr = verify_certificate(lp.pair, sr.reduced, sr.cert);
            os << "certificate verifies: " << (vr.ok ? "OK (strict)" : "FAIL") << "\n";
            return {stem ? CmdStatus::Ok : CmdStatus::Negative, os.str()};
        } catch (const StemReductionIncomplete& e) {
            os << "stem reduction incomplete: " << e.what() << "\n";
            return {CmdStatus::Negative, os.str()};
        }
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

CmdResult cmd_isoclinic_verify(const std::string& spec1, const std::string& spec2,
                               const std::string& cert_path, const std::string& mode) {
    try {
        LoadedPair lp1 = load_pair_from_text(load_source(spec1));
        LoadedPair lp2 = load_pair_from_text(load_source(spec2));
        Certificate cert = load_certificate(cert_path, lp1.pair, lp2.pair, parse_mode(mode));
        VerifyResult vr = verify_certificate(lp1.pair, lp2.pair, cert);
        if (vr.ok)
            return {CmdStatus::Ok,
                    std::string("OK (") + (cert.mode == CertMode::Strict ? "strict" : "linear") +
                        ")\n"};
        std::ostringstream os;
        os << "VIOLATION: " << vr.detail;
        if (vr.detail.empty()) {
            switch (vr.kind) {
                case VerifyFailure::AlphaNotInvertible: os << "alpha is not invertible"; break;
                case VerifyFailure::BetaNotInvertible: os << "beta is not invertible"; break;
                default: os << "certificate does not verify"; break;
            }
        }
        os << "\n";
        return {CmdStatus::Negative, os.str()};
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

CmdResult cmd_isoclinic_search(const std::string& spec1, const std::string& spec2, size_t budget) {
    try {
        LoadedPair lp1 = load_pair_from_text(load_source(spec1));
        LoadedPair lp2 = load_pair_from_text(load_source(spec2));
        SearchResult sr = search_isoclinism(lp1.pair, lp2.pair, budget);
        std::ostringstream os;
        switch (sr.status) {
            case SearchStatus::Found: {
                os << "FOUND certificate after " << sr.nodes << " assignments\n";
                os << matrix_block("alpha:", sr.cert.alpha);
                os << matrix_block("beta:", sr.cert.beta);
                os << "verifies: OK (strict)\n";
                return {CmdStatus::Ok, os.str()};
            }
            case SearchStatus::NotIsoclinic:
                os << "NOT ISOCLINIC: " << sr.reason << "\n";
                return {CmdStatus::Negative, os.str()};
            default:
                os << "INCONCLUSIVE: " << sr.reason << "\n";
                return {CmdStatus::Negative, os.str()};
        }
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

CmdResult cmd_factorset(const std::string& spec) {
    try {
        LoadedPair lp = load_pair_from_text(load_source(spec));
        FactorSetData d = factor_set_from_pair(lp.pair.q, lp.pair.m);
        std::ostringstream os;
        os << "kernel m: dim " << d.base.dim << "; quotient q/m: dim " << d.quot.dim << "\n";
        os << serialize_factorset_file(d);
        FactorIdentityCheck chk = check_factor_identity(d);
        if (chk.ok) {
            os << "factor-set identity: OK\n";
            return {CmdStatus::Ok, os.str()};
        }
        os << "factor-set identity: VIOLATION at (" << chk.x + 1 << "," << chk.y + 1 << ","
           << chk.z + 1 << ")\n";
        return {CmdStatus::Negative, os.str()};
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

CmdResult cmd_extend(const std::string& factorset_path) {
    try {
        FactorSetData d = parse_factorset_file(read_file(factorset_path));
        std::ostringstream os;
        try {
            ExtensionAlgebra ext = build_extension(d);
            os << "extension algebra: dim " << ext.alg.dim << " over " << ext.alg.field.str()
               << "\n";
            os << "relations:\n" << relations_str(ext.alg);
            os << "Leibniz check: OK (" << kind_str(ext.alg.kind) << ")\n";
            return {CmdStatus::Ok, os.str()};
        } catch (const FactorIdentityViolated& e) {
            os << "FAIL: " << e.what() << "\n";
            return {CmdStatus::Negative, os.str()};
        } catch (const LeibnizCheckFailed& e) {
            os << "FAIL: " << e.what() << "\n";
            return {CmdStatus::Negative, os.str()};
        }
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

CmdResult cmd_lemma2(const std::string& spec) {
    try {
        LoadedPair lp = load_pair_from_text(load_source(spec));
        Lemma2Result rec = lemma2_reconstruct(lp.pair.q, lp.pair.m);
        std::ostringstream os;
        os << "extension m x_f q/m: dim " << rec.ext.alg.dim << " = " << rec.ext.base_dim
           << " + " << rec.ext.quot_dim << "\n";
        os << matrix_block("reconstruction map (m, xbar) -> m + rho(xbar):", rec.iso);
        os << "reconstruction verifies: OK (isomorphism onto q)\n";
        return {CmdStatus::Ok, os.str()};
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

CmdResult cmd_prop4(const std::string& ext1_path, const std::string& ext2_path,
                    const std::string& eta_path) {
    try {
        FactorSetData d1 = parse_factorset_file(read_file(ext1_path));
        FactorSetData d2 = parse_factorset_file(read_file(ext2_path));
        ExtensionAlgebra e1 = build_extension(d1), e2 = build_extension(d2);
        LinearMap eta =
            parse_eta_file(read_file(eta_path), e1.alg.field, e1.alg.dim, e2.alg.dim);
        std::ostringstream os;
        try {
            InducedMapsResult r = induced_maps_and_d(eta, e1, e2);
            os << matrix_block("eta1 (quotient part):", r.eta1);
            os << matrix_block("eta2 (central part):", r.eta2);
            os << matrix_block("d:", r.d);
            if (r.ok) {
                os << "compatibility equation: OK on all basis pairs\n";
                return {CmdStatus::Ok, os.str()};
            }
            os << "compatibility equation: VIOLATION at basis pair (" << r.i + 1 << ","
               << r.j + 1 << ")\n";
            return {CmdStatus::Negative, os.str()};
        } catch (const CenterNotPreserved&) {
            os << "FAIL: eta does not preserve the embedded central part\n";
            return {CmdStatus::Negative, os.str()};
        } catch (const CertificateInvalid& e) {
            os << "FAIL: " << e.what() << "\n";
            return {CmdStatus::Negative, os.str()};
        }
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

CmdResult cmd_theorem3(const std::string& spec1, const std::string& spec2,
                       const std::string& cert_path, const std::string& eps_mode) {
    try {
        LoadedPair lp1 = load_pair_from_text(load_source(spec1));
        LoadedPair lp2 = load_pair_from_text(load_source(spec2));
        Certificate cert =
            load_certificate(cert_path, lp1.pair, lp2.pair, CertMode::Strict);
        EpsilonMode em = parse_eps_mode(eps_mode, EpsilonMode::AllElements);
        std::ostringstream os;
        try {
            Theorem3Result r = theorem3_construct(lp1.pair, lp2.pair, cert, em);
            switch (r.status) {
                case Theorem3Status::Iso:
                    os << "ISOMORPHISM constructed and verified (m1 ~= m2)\n";
                    os << matrix_block("lambda (on m_f coordinates):", r.lambda);
                    os << matrix_block("induced isomorphism m1 -> m2:", r.m_iso);
                    return {CmdStatus::Ok, os.str()};
                case Theorem3Status::ConditionFailedA:
                    os << "CONDITION a) FAILED: " << r.detail << "\n";
                    return {CmdStatus::Negative, os.str()};
                case Theorem3Status::ConditionFailedB:
                    os << "CONDITION b) FAILED: " << r.detail;
                    if (r.eps.witness)
                        os << " (witness x=" << combo_str(r.eps.witness->x, lp1.pair.q.names, true)
                           << " y=" << combo_str(r.eps.witness->y, lp1.pair.q.names, true) << ")";
                    os << "\n";
                    return {CmdStatus::Negative, os.str()};
                default:
                    os << "VERIFICATION FAILED: " << r.detail << "\n";
                    return {CmdStatus::Negative, os.str()};
            }
        } catch (const CertificateInvalid& e) {
            os << "FAIL: " << e.what() << "\n";
            return {CmdStatus::Negative, os.str()};
        }
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

CmdResult cmd_epsilon(const std::string& spec, const std::string& mode) {
    try {
        LoadedPair lp = load_pair_from_text(load_source(spec));
        EpsilonMode em = parse_eps_mode(mode, EpsilonMode::BasisPairs);
        // the ideal restricts the check when declared; default is the whole algebra
        Subspace s = lp.file.has_ideal ? lp.pair.m.space
                                       : Subspace::full(lp.alg.field, lp.alg.dim);
        EpsilonReport rep = epsilon_condition(lp.alg, s, em);
        std::ostringstream os;
        if (rep.pass) {
            if (em == EpsilonMode::AllElements) {
                os << "OK (polynomial identity)\n";
            } else {
                os << "OK\n";
                for (const auto& e : rep.entries)
                    os << "eps[" << lp.alg.name_of(e.i) << "," << lp.alg.name_of(e.j)
                       << "] = " << e.eps.str() << "\n";
            }
            return {CmdStatus::Ok, os.str()};
        }
        if (rep.witness)
            os << "FAIL witness x=" << combo_str(rep.witness->x, lp.alg.names, true)
               << " y=" << combo_str(rep.witness->y, lp.alg.names, true) << "\n";
        else
            os << "FAIL (" << rep.detail << ")\n";
        return {CmdStatus::Negative, os.str()};
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

CmdResult cmd_catalog(const std::string& name_or_empty) {
    try {
        std::ostringstream os;
        auto print_entry = [&os](const CatalogEntry& e) {
            LoadedPair lp = load_pair_from_text(e.text);
            os << e.name << ": " << e.description << "\n";
            os << "  dim " << lp.alg.dim << " over " << lp.alg.field.str() << " ("
               << kind_str(lp.alg.kind) << " Leibniz)\n";
            os << "relations:\n" << relations_str(lp.alg);
            if (!lp.pair.full())
                os << "pair ideal m = " << lp.pair.m.space.str(lp.alg.names) << "\n";
            for (const auto& [k, v] : lp.file.meta) os << "  " << k << ": " << v << "\n";
            EpsilonReport eps;
            bool have_eps = false;
            for (const auto& c : e.claims) {
                std::string computed;
                if (c.key == "z_lie") {
                    computed = lp.pair.z_lie.str(lp.alg.names);
                } else if (c.key == "k_lie") {
                    computed = lp.pair.k_lie.space.str(lp.alg.names);
                } else if (c.key == "stem") {
                    computed = is_stem(lp.pair) ? "true" : "false";
                } else if (c.key.rfind("eps", 0) == 0) {
                    if (!have_eps) {
                        eps = epsilon_condition(lp.alg, Subspace::full(lp.alg.field, lp.alg.dim),
                                                EpsilonMode::BasisPairs);
                        have_eps = true;
                    }
                    if (c.key == "eps_all_elements") {
                        computed = epsilon_condition(lp.alg,
                                                     Subspace::full(lp.alg.field, lp.alg.dim),
                                                     EpsilonMode::AllElements)
                                           .pass
                                       ? "holds for all elements"
                                       : "fails for general elements";
                    } else if (!eps.pass) {
                        computed = "condition fails on basis pairs";
                    } else if (c.key.size() == 6 && c.key[3] == '_') {
                        // "eps_ij": the single matching table entry
                        size_t want_i = static_cast<size_t>(c.key[4] - '1');
                        size_t want_j = static_cast<size_t>(c.key[5] - '1');
                        for (const auto& entry : eps.entries)
                            if (entry.i == want_i && entry.j == want_j)
                                computed = entry.eps.str();
                        if (computed.empty()) computed = "no nonzero pair at these indices";
                    } else {
                        for (const auto& entry : eps.entries) {
                            if (!computed.empty()) computed += ", ";
                            computed += "eps[" + lp.alg.name_of(entry.i) + "," +
                                        lp.alg.name_of(entry.j) + "]=" + entry.eps.str();
                        }
                        if (computed.empty()) computed = "vacuous (no nonzero opposite pairs)";
                    }
                }
                os << "  claim " << c.key << ": printed value " << c.claimed;
                if (!computed.empty()) os << "; computed " << computed;
                if (c.disputed) os << "  [DISPUTED: " << c.note << "]";
                os << "\n";
            }
        };
        if (name_or_empty.empty()) {
            for (const auto& e : catalog()) print_entry(e);
            return {CmdStatus::Ok, os.str()};
        }
        const CatalogEntry* e = catalog_find(name_or_empty);
        if (!e) return input_error("no catalog entry named '" + name_or_empty + "'");
        print_entry(*e);
        return {CmdStatus::Ok, os.str()};
    } catch (const Error& e) {
        return input_error(e.what());
    }
}

}  // namespace lzb
