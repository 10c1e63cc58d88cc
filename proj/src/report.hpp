#ifndef LZB_REPORT_HPP
#define LZB_REPORT_HPP

#include <string>

#include "catalog.hpp"
#include "isoclinism.hpp"

namespace lzb {

// Exit-code contract: 0 success, 1 mathematical negative (violation,
// not-stem, not-found), 2 input error.  No mathematical negative ever maps
// to 0.
enum class CmdStatus { Ok = 0, Negative = 1, InputError = 2 };

struct CmdResult {
    CmdStatus status = CmdStatus::Ok;
    std::string text;
};

// Catalog name, else filesystem path; throws Error when neither resolves.
std::string load_source(const std::string& name_or_path);
std::string read_file(const std::string& path);

struct LoadedPair {
    AlgebraFile file;
    LeibnizAlgebra alg;   // validated
    Pair pair;            // declared ideal, or the full pair
};

LoadedPair load_pair_from_text(const std::string& text, const std::string& ideal_override = "");

CmdResult cmd_validate(const std::string& spec);
CmdResult cmd_invariants(const std::string& spec, const std::string& ideal_override);
CmdResult cmd_stem(const std::string& spec);
CmdResult cmd_isoclinic_verify(const std::string& spec1, const std::string& spec2,
                               const std::string& cert_path, const std::string& mode);
CmdResult cmd_isoclinic_search(const std::string& spec1, const std::string& spec2, size_t budget);
CmdResult cmd_factorset(const std::string& spec);
CmdResult cmd_extend(const std::string& factorset_path);
CmdResult cmd_lemma2(const std::string& spec);
CmdResult cmd_prop4(const std::string& ext1_path, const std::string& ext2_path,
                    const std::string& eta_path);
CmdResult cmd_theorem3(const std::string& spec1, const std::string& spec2,
                       const std::string& cert_path, const std::string& eps_mode);
CmdResult cmd_epsilon(const std::string& spec, const std::string& mode);
CmdResult cmd_catalog(const std::string& name_or_empty);

}  // namespace lzb

#endif
