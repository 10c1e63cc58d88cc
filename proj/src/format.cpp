#include "format.hpp"

#include <algorithm>
#include <sstream>

namespace lzb {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool looks_numeric(const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(t[i])) && t[i] != '/') return false;
    return true;
}

Scalar parse_scalar(const std::string& tok, const Field& f, size_t line) {
    try {
        size_t slash = tok.find('/');
        if (slash == std::string::npos) {
            BigInt v = BigInt::from_string(tok);
            if (f.is_rationals()) return Scalar::rational_int(v);
            BigInt p(static_cast<long long>(f.p));
            BigInt r = v % p;
            long long rr = r.to_int64();
            if (rr < 0) rr += static_cast<long long>(f.p);
            return Scalar::residue(f, static_cast<uint64_t>(rr));
        }
        std::string num = tok.substr(0, slash), den = tok.substr(slash + 1);
        if (f.is_rationals()) return Scalar::rational(BigInt::from_string(num), BigInt::from_string(den));
        Scalar a = parse_scalar(num, f, line), b = parse_scalar(den, f, line);
        return a / b;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(line, "bad coefficient '" + tok + "': " + e.what());
    }
}

struct NameTable {
    const std::vector<std::string>* names;
    size_t dim;
    size_t resolve(const std::string& tok, size_t line) const {
        if (looks_numeric(tok)) {
            long long v = 0;
            try {
                v = BigInt::from_string(tok).to_int64();
            } catch (...) {
                throw ParseError(line, "bad index '" + tok + "'");
            }
            if (v < 1 || static_cast<size_t>(v) > dim)
                throw ParseError(line, "basis index " + tok + " out of range 1.." +
                                           std::to_string(dim));
            return static_cast<size_t>(v) - 1;
        }
        if (names)
            for (size_t i = 0; i < names->size(); ++i)
                if ((*names)[i] == tok) return i;
        for (size_t i = 0; i < dim; ++i)
            if (default_name(i) == tok) return i;
        throw ParseError(line, "unknown basis name '" + tok + "'");
    }
};

// "<coeff>*<atom>" or bare "<atom>" (coefficient 1)
void parse_term(const std::string& term, const NameTable& nt, const Field& f, size_t line,
                Vector& into) {
    std::string t = trim(term);
    if (t.empty()) throw ParseError(line, "empty term");
    size_t star = t.find('*');
    Scalar coeff = Scalar::one(f);
    std::string atom = t;
    if (star != std::string::npos) {
        coeff = parse_scalar(trim(t.substr(0, star)), f, line);
        atom = trim(t.substr(star + 1));
    } else if (t[0] == '-') {
        coeff = -Scalar::one(f);
        atom = trim(t.substr(1));
    }
    size_t idx = nt.resolve(atom, line);
    into[idx] = into[idx] + coeff;
}

Vector parse_combo(const std::string& text, const NameTable& nt, const Field& f, size_t line) {
    Vector v(f, nt.dim);
    std::string cur;
    // split on top-level '+' separators; '-' only binds to the coefficient
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '+') {
            std::string piece = trim(cur);
            if (!piece.empty()) parse_term(piece, nt, f, line, v);
            cur.clear();
        } else {
            cur += text[i];
        }
    }
    if (v.size() != nt.dim) throw ParseError(line, "bad combination");
    return v;
}

struct RelationLHS {
    size_t i, j;
};

RelationLHS parse_relation_lhs(const std::string& lhs, const NameTable& nt, size_t line) {
    std::string t = trim(lhs);
    if (t.size() < 5 || t.front() != '[' || t.back() != ']')
        throw ParseError(line, "relation must start with [i,j]");
    std::string inner = t.substr(1, t.size() - 2);
    size_t comma = inner.find(',');
    if (comma == std::string::npos) throw ParseError(line, "relation needs two indices");
    return {nt.resolve(trim(inner.substr(0, comma)), line),
            nt.resolve(trim(inner.substr(comma + 1)), line)};
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
    AlgebraFile af;
    bool have_field = false, have_dim = false;
    std::istringstream is(text);
    std::string raw;
    size_t lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.rfind("field", 0) == 0) {
            auto toks = split_ws(line);
            if (toks.size() == 2 && toks[1] == "Q") {
                af.field = Field::rationals();
            } else if (toks.size() == 3 && toks[1] == "GF") {
                uint64_t p = 0;
                try {
                    p = static_cast<uint64_t>(BigInt::from_string(toks[2]).to_int64());
                } catch (...) {
                    throw ParseError(lineno, "bad modulus '" + toks[2] + "'");
                }
                if (!is_prime_u64(p)) throw ParseError(lineno, "modulus " + toks[2] + " is not prime");
                af.field = Field::gf(p);
            } else {
                throw ParseError(lineno, "expected 'field Q' or 'field GF <p>'");
            }
            have_field = true;
        } else if (line.rfind("dim", 0) == 0) {
            auto toks = split_ws(line);
            long long n = -1;
            if (toks.size() == 2) {
                try {
                    n = BigInt::from_string(toks[1]).to_int64();
                } catch (...) {
                }
            }
            if (n < 0 || n > 64) throw ParseError(lineno, "bad dimension");
            af.dim = static_cast<size_t>(n);
            af.tensor.assign(af.dim * af.dim * af.dim, Scalar::zero(af.field));
            have_dim = true;
        } else if (line.rfind("basis", 0) == 0) {
            if (!have_dim) throw ParseError(lineno, "basis before dim");
            auto toks = split_ws(line);
            if (toks.size() != af.dim + 1)
                throw ParseError(lineno, "expected " + std::to_string(af.dim) + " basis names");
            af.names.assign(toks.begin() + 1, toks.end());
        } else if (line.rfind("ideal", 0) == 0) {
            if (!have_dim || !have_field) throw ParseError(lineno, "ideal before field/dim");
            NameTable nt{af.names.empty() ? nullptr : &af.names, af.dim};
            std::string rest = trim(line.substr(5));
            af.has_ideal = true;
            std::string cur;
            for (size_t i = 0; i <= rest.size(); ++i) {
                if (i == rest.size() || rest[i] == ';') {
                    std::string piece = trim(cur);
                    if (!piece.empty()) af.ideal_gens.push_back(parse_combo(piece, nt, af.field, lineno));
                    cur.clear();
                } else {
                    cur += rest[i];
                }
            }
        } else if (line.rfind("meta", 0) == 0) {
            auto rest = trim(line.substr(4));
            size_t sp = rest.find_first_of(" \t");
            if (sp == std::string::npos)
                af.meta.emplace_back(rest, "");
            else
                af.meta.emplace_back(rest.substr(0, sp), trim(rest.substr(sp)));
        } else if (line[0] == '[') {
            if (!have_field || !have_dim) throw ParseError(lineno, "relation before field/dim");
            size_t eq = line.find('=');
            if (eq == std::string::npos) throw ParseError(lineno, "relation needs '='");
            NameTable nt{af.names.empty() ? nullptr : &af.names, af.dim};
            RelationLHS lhs = parse_relation_lhs(line.substr(0, eq), nt, lineno);
            Vector rhs = parse_combo(line.substr(eq + 1), nt, af.field, lineno);
            for (size_t k = 0; k < af.dim; ++k)
                af.tensor[(lhs.i * af.dim + lhs.j) * af.dim + k] = rhs[k];
        } else {
            throw ParseError(lineno, "unrecognized line '" + line + "'");
        }
    }
    if (!have_field) throw ParseError(lineno ? lineno : 1, "missing 'field' line");
    if (!have_dim) throw ParseError(lineno ? lineno : 1, "missing 'dim' line");
    return af;
}

LeibnizAlgebra AlgebraFile::to_algebra() const {
    LeibnizAlgebra alg(field, dim);
    alg.c = tensor;
    if (!names.empty()) alg.names = names;
    return alg;
}

std::optional<Subspace> AlgebraFile::ideal_subspace() const {
    if (!has_ideal) return std::nullopt;
    return Subspace::from_vectors(field, dim, ideal_gens);
}

bool AlgebraFile::semantic_equal(const AlgebraFile& o) const {
    if (field != o.field || dim != o.dim) return false;
    auto name_of = [](const AlgebraFile& a, size_t i) {
        return a.names.empty() ? default_name(i) : a.names[i];
    };
    for (size_t i = 0; i < dim; ++i)
        if (name_of(*this, i) != name_of(o, i)) return false;
    if (tensor != o.tensor) return false;
    if (has_ideal != o.has_ideal) return false;
    if (has_ideal && *ideal_subspace() != *o.ideal_subspace()) return false;
    return meta == o.meta;
}

std::string scalar_token(const Scalar& s) { return s.str(); }

namespace {

std::string combo_tokens(const Vector& v) {
    std::string out;
    bool first = true;
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!first) out += " + ";
        out += scalar_token(v[k]) + "*" + std::to_string(k + 1);
        first = false;
    }
    if (first) out = "0*1";
    return out;
}

}  // namespace

std::string serialize_algebra_file(const AlgebraFile& af) {
    std::ostringstream os;
    if (af.field.is_rationals())
        os << "field Q\n";
    else
        os << "field GF " << af.field.p << "\n";
    os << "dim " << af.dim << "\n";
    if (!af.names.empty()) {
        os << "basis";
        for (const auto& n : af.names) os << ' ' << n;
        os << "\n";
    }
    for (size_t i = 0; i < af.dim; ++i)
        for (size_t j = 0; j < af.dim; ++j) {
            Vector rhs(af.field, af.dim);
            bool nonzero = false;
            for (size_t k = 0; k < af.dim; ++k) {
                rhs[k] = af.tensor[(i * af.dim + j) * af.dim + k];
                nonzero = nonzero || !rhs[k].is_zero();
            }
            if (nonzero)
                os << "[" << i + 1 << "," << j + 1 << "] = " << combo_tokens(rhs) << "\n";
        }
    if (af.has_ideal) {
        os << "ideal ";
        for (size_t g = 0; g < af.ideal_gens.size(); ++g) {
            if (g) os << "; ";
            os << combo_tokens(af.ideal_gens[g]);
        }
        os << "\n";
    }
    for (const auto& [k, v] : af.meta) os << "meta " << k << (v.empty() ? "" : " " + v) << "\n";
    return os.str();
}

CertificateFile parse_certificate_file(const std::string& text, const Field& f) {
    CertificateFile cf;
    std::istringstream is(text);
    std::string raw;
    size_t lineno = 0;
    int block = -1;  // 0 alpha, 1 beta
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line == "alpha:") {
            block = 0;
            continue;
        }
        if (line == "beta:") {
            block = 1;
            continue;
        }
        if (block < 0) throw ParseError(lineno, "expected 'alpha:' or 'beta:' header");
        std::vector<Scalar> row;
        for (const auto& tok : split_ws(line)) row.push_back(parse_scalar(tok, f, lineno));
        (block == 0 ? cf.alpha_rows : cf.beta_rows).push_back(std::move(row));
    }
    if (cf.alpha_rows.empty() && cf.beta_rows.empty())
        throw ParseError(lineno ? lineno : 1, "certificate has no matrix blocks");
    return cf;
}

namespace {

LinearMap map_from_rows(const std::vector<std::vector<Scalar>>& rows, const Field& f, size_t dom,
                        size_t cod, const std::string& what) {
    if (rows.size() != dom)
        throw Error(what + ": expected " + std::to_string(dom) + " rows, got " +
                    std::to_string(rows.size()));
    std::vector<Vector> imgs;
    for (const auto& r : rows) {
        if (r.size() != cod)
            throw Error(what + ": expected rows of length " + std::to_string(cod));
        Vector v(f, cod);
        for (size_t i = 0; i < cod; ++i) v[i] = r[i];
        imgs.push_back(std::move(v));
    }
    return LinearMap::from_images(f, imgs, cod);
}

}  // namespace

Certificate certificate_from_file(const CertificateFile& cf, const Field& f, size_t alpha_dom,
                                  size_t alpha_cod, size_t beta_dom, size_t beta_cod,
                                  CertMode mode) {
    Certificate cert;
    cert.alpha = map_from_rows(cf.alpha_rows, f, alpha_dom, alpha_cod, "alpha block");
    cert.beta = map_from_rows(cf.beta_rows, f, beta_dom, beta_cod, "beta block");
    cert.mode = mode;
    return cert;
}

FactorSetData parse_factorset_file(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    size_t lineno = 0;
    Field f = Field::rationals();
    bool have_field = false;
    long long base_dim = -1, quot_dim = -1;
    FactorSetData d;
    enum class MatBlock { None, L, R };
    MatBlock in_block = MatBlock::None;
    size_t block_index = 0, block_row = 0;

    auto ensure_dims = [&](size_t line) {
        if (!have_field || base_dim < 0 || quot_dim < 0)
            throw ParseError(line, "field, base dim and quotient dim must come first");
        if (d.f.empty()) {
            d.base = LeibnizAlgebra(f, static_cast<size_t>(base_dim));
            d.quot = LeibnizAlgebra(f, static_cast<size_t>(quot_dim));
            d.f.assign(d.quot.dim * d.quot.dim, Vector(f, d.base.dim));
            d.L.assign(d.quot.dim, Matrix(f, d.base.dim, d.base.dim));
            d.R.assign(d.quot.dim, Matrix(f, d.base.dim, d.base.dim));
        }
    };

    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (in_block != MatBlock::None) {
            auto toks = split_ws(line);
            if (toks.size() != d.base.dim)
                throw ParseError(lineno, "matrix row needs " + std::to_string(d.base.dim) +
                                             " entries");
            Matrix& m = (in_block == MatBlock::L ? d.L : d.R)[block_index];
            for (size_t c = 0; c < toks.size(); ++c)
                m.at(block_row, c) = parse_scalar(toks[c], f, lineno);
            if (++block_row == d.base.dim) in_block = MatBlock::None;
            continue;
        }

        if (line.rfind("field", 0) == 0) {
            auto toks = split_ws(line);
            if (toks.size() == 2 && toks[1] == "Q")
                f = Field::rationals();
            else if (toks.size() == 3 && toks[1] == "GF") {
                uint64_t p = static_cast<uint64_t>(BigInt::from_string(toks[2]).to_int64());
                if (!is_prime_u64(p)) throw ParseError(lineno, "modulus is not prime");
                f = Field::gf(p);
            } else
                throw ParseError(lineno, "bad field line");
            have_field = true;
        } else if (line.rfind("base dim", 0) == 0 || line.rfind("quotient dim", 0) == 0) {
            auto toks = split_ws(line);
            long long v = -1;
            if (toks.size() == 3) {
                try {
                    v = BigInt::from_string(toks[2]).to_int64();
                } catch (...) {
                }
            }
            if (v < 0 || v > 64) throw ParseError(lineno, "bad dimension line");
            (toks[0] == "base" ? base_dim : quot_dim) = v;
        } else if (line.rfind("convention", 0) == 0) {
            auto toks = split_ws(line);
            if (toks.size() != 2 || (toks[1] != "right" && toks[1] != "left"))
                throw ParseError(lineno, "convention must be 'right' or 'left'");
            d.convention = toks[1] == "right" ? LeibnizKind::Right : LeibnizKind::Left;
        } else if (line.rfind("base [", 0) == 0 || line.rfind("quotient [", 0) == 0 ||
                   line.rfind("f [", 0) == 0) {
            ensure_dims(lineno);
            bool is_base = line.rfind("base", 0) == 0;
            bool is_f = line.rfind("f", 0) == 0;
            LeibnizAlgebra& target = is_base ? d.base : d.quot;
            const size_t lhs_dim = is_base ? d.base.dim : d.quot.dim;
            size_t eq = line.find('=');
            if (eq == std::string::npos) throw ParseError(lineno, "relation needs '='");
            size_t br = line.find('[');
            NameTable lhs_nt{nullptr, lhs_dim};
            RelationLHS lhs = parse_relation_lhs(line.substr(br, eq - br), lhs_nt, lineno);
            NameTable rhs_nt{nullptr, is_f ? d.base.dim : target.dim};
            Vector rhs = parse_combo(line.substr(eq + 1), rhs_nt, f, lineno);
            if (is_f) {
                d.f_at(lhs.i, lhs.j) = rhs;
            } else {
                for (size_t k = 0; k < target.dim; ++k)
                    target.cc(lhs.i, lhs.j, k) = rhs[k];
            }
        } else if (line.rfind("L ", 0) == 0 || line.rfind("R ", 0) == 0) {
            ensure_dims(lineno);
            auto toks = split_ws(line);
            if (toks.size() != 2) throw ParseError(lineno, "expected 'L <x>' or 'R <x>'");
            long long x = 0;
            try {
                x = BigInt::from_string(toks[1]).to_int64();
            } catch (...) {
                throw ParseError(lineno, "bad action index '" + toks[1] + "'");
            }
            if (x < 1 || static_cast<size_t>(x) > d.quot.dim)
                throw ParseError(lineno, "action index out of range");
            in_block = toks[0] == "L" ? MatBlock::L : MatBlock::R;
            block_index = static_cast<size_t>(x) - 1;
            block_row = 0;
            if (d.base.dim == 0) in_block = MatBlock::None;
        } else {
            throw ParseError(lineno, "unrecognized line '" + line + "'");
        }
    }
    if (!have_field || base_dim < 0 || quot_dim < 0)
        throw ParseError(lineno ? lineno : 1, "factor set file needs field, base dim, quotient dim");
    ensure_dims(lineno ? lineno : 1);
    // both component algebras must be Leibniz before anything downstream
    check_leibniz(d.base);
    check_leibniz(d.quot);
    if (d.base.kind == LeibnizKind::NotLeibniz || d.quot.kind == LeibnizKind::NotLeibniz)
        throw ParseError(1, "base/quotient tensors are not Leibniz algebras");
    return d;
}

std::string serialize_factorset_file(const FactorSetData& d) {
    std::ostringstream os;
    if (d.base.field.is_rationals())
        os << "field Q\n";
    else
        os << "field GF " << d.base.field.p << "\n";
    os << "base dim " << d.base.dim << "\n";
    os << "quotient dim " << d.quot.dim << "\n";
    os << "convention " << (d.convention == LeibnizKind::Left ? "left" : "right") << "\n";
    auto emit_relations = [&os](const LeibnizAlgebra& a, const std::string& prefix) {
        for (size_t i = 0; i < a.dim; ++i)
            for (size_t j = 0; j < a.dim; ++j) {
                Vector b = a.bracket_basis(i, j);
                if (!b.is_zero())
                    os << prefix << " [" << i + 1 << "," << j + 1 << "] = " << combo_tokens(b)
                       << "\n";
            }
    };
    emit_relations(d.base, "base");
    emit_relations(d.quot, "quotient");
    for (size_t x = 0; x < d.quot.dim; ++x)
        for (size_t y = 0; y < d.quot.dim; ++y)
            if (!d.f_at(x, y).is_zero())
                os << "f [" << x + 1 << "," << y + 1 << "] = " << combo_tokens(d.f_at(x, y))
                   << "\n";
    auto emit_mats = [&os, &d](const std::vector<Matrix>& ms, const std::string& prefix) {
        for (size_t x = 0; x < ms.size(); ++x) {
            bool zero = true;
            for (size_t i = 0; i < d.base.dim && zero; ++i)
                for (size_t j = 0; j < d.base.dim; ++j)
                    if (!ms[x].at(i, j).is_zero()) {
                        zero = false;
                        break;
                    }
            if (zero) continue;
            os << prefix << " " << x + 1 << "\n";
            for (size_t i = 0; i < d.base.dim; ++i) {
                for (size_t j = 0; j < d.base.dim; ++j)
                    os << (j ? " " : "") << scalar_token(ms[x].at(i, j));
                os << "\n";
            }
        }
    };
    emit_mats(d.L, "L");
    emit_mats(d.R, "R");
    return os.str();
}

LinearMap parse_eta_file(const std::string& text, const Field& f, size_t dom, size_t cod) {
    std::istringstream is(text);
    std::string raw;
    size_t lineno = 0;
    bool in_block = false;
    std::vector<std::vector<Scalar>> rows;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line == "eta:") {
            in_block = true;
            continue;
        }
        if (!in_block) throw ParseError(lineno, "expected 'eta:' header");
        std::vector<Scalar> row;
        for (const auto& tok : split_ws(line)) row.push_back(parse_scalar(tok, f, lineno));
        rows.push_back(std::move(row));
    }
    return map_from_rows(rows, f, dom, cod, "eta block");
}

}  // namespace lzb
