#include "catalog.hpp"

namespace lzb {

namespace {

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;

    cat.push_back({"A1",
                   "5-dimensional nilpotent Leibniz algebra A_1 (5-dim classification)",
                   "field Q\n"
                   "dim 5\n"
                   "basis a1 a2 a3 a4 a5\n"
                   "[1,1] = 1*3\n"
                   "[2,1] = 1*4\n"
                   "[1,3] = 1*5\n",
                   {
                       {"z_lie", "span{a4, a5}", false, ""},
                       {"k_lie", "span{a3, a4, a5}", false, ""},
                       {"stem", "true", false, ""},
                   }});

    cat.push_back({"A7",
                   "5-dimensional nilpotent Leibniz algebra A_7 (5-dim classification)",
                   "field Q\n"
                   "dim 5\n"
                   "basis g1 g2 g3 g4 g5\n"
                   "[1,1] = 1*3\n"
                   "[1,2] = 1*4\n"
                   "[2,1] = 1*5\n"
                   "[1,3] = 1*5\n",
                   {
                       {"z_lie", "span{g4, g5}", false, ""},
                       {"k_lie", "span{g3, g4, g5}", false, ""},
                       {"stem", "true", false, ""},
                       {"eps", "fails condition b)", false, ""},
                   }});

    cat.push_back({"L16",
                   "4-dimensional Leibniz algebra, class L_16 (4-dim classification)",
                   "field Q\n"
                   "dim 4\n"
                   "basis a1 a2 a3 a4\n"
                   "[1,1] = 1*3\n"
                   "[2,4] = 1*2\n"
                   "[4,2] = -1*2\n"
                   "[4,4] = -2*3\n"
                   "meta note the table prints [a4,a4] = -2*a2, which fails the Leibniz identity"
                   " for these relations; -2*a3 is the Leibniz completion and is what ships\n",
                   {
                       {"eps_11", "1", false, ""},
                       {"eps_24", "-1", false, ""},
                       {"eps_44", "1", false, ""},
                       {"eps_all_elements", "holds basis-pairwise only", false,
                        "x=a1+a4, y=a1+a2 bracket to non-parallel vectors"},
                   }});

    cat.push_back({"L26",
                   "4-dimensional Leibniz algebra, class L_26 (mu_2 = 1), with the ideal "
                   "m = span{e1,e2,e3}",
                   "field Q\n"
                   "dim 4\n"
                   "basis e1 e2 e3 e4\n"
                   "[1,4] = 1*1\n"
                   "[2,4] = 1*2\n"
                   "[4,4] = 1*3\n"
                   "ideal 1*1; 1*2; 1*3\n",
                   {
                       {"z_lie", "span{e3}", false, ""},
                       {"k_lie", "span{e1, e2, e3}", true,
                        "the defining generators [m,x]+[x,m] yield span{e1, e2}; e3 = [e4,e4] "
                        "but e4 is outside the ideal"},
                       {"stem", "true", true,
                        "with the computed commutator span{e1, e2} the pair is not stem"},
                   }});

    cat.push_back({"L40",
                   "4-dimensional Leibniz algebra, class L_40, with the ideal m = span{a1,a2,a3}",
                   "field Q\n"
                   "dim 4\n"
                   "basis a1 a2 a3 a4\n"
                   "[1,4] = 1*2\n"
                   "[3,4] = 1*3\n"
                   "[4,4] = 1*1\n"
                   "ideal 1*1; 1*2; 1*3\n",
                   {
                       {"z_lie", "span{a2}", false, ""},
                       {"k_lie", "span{a1, a2, a3}", true,
                        "the defining generators yield span{a2, a3}; a1 = [a4,a4] but a4 is "
                        "outside the ideal"},
                       {"stem", "true", false, "holds for the computed commutator as well"},
                   }});

    cat.push_back({"abelian3",
                   "3-dimensional abelian (zero bracket) reference entry",
                   "field Q\n"
                   "dim 3\n",
                   {
                       {"z_lie", "span{e1, e2, e3}", false, ""},
                       {"k_lie", "span{}", false, ""},
                       {"stem", "false", false, ""},
                   }});

    cat.push_back({"class2d",
                   "3-dimensional solvable Leibniz algebra, class 2(d)",
                   "field Q\n"
                   "dim 3\n"
                   "basis a1 a2 a3\n"
                   "[1,3] = 1*1\n",
                   {
                       {"z_lie", "span{a2}", false, ""},
                       {"k_lie", "span{a1}", false, ""},
                   }});

    cat.push_back({"class2e",
                   "3-dimensional solvable Leibniz algebra, class 2(e) with alpha = 1",
                   "field Q\n"
                   "dim 3\n"
                   "basis g1 g2 g3\n"
                   "[1,3] = 1*1\n"
                   "[2,3] = 1*2\n"
                   "[3,2] = -1*2\n",
                   {
                       {"z_lie", "span{g2}", false, ""},
                       {"k_lie", "span{g1}", false, ""},
                   }});

    cat.push_back({"class3a",
                   "3-dimensional Leibniz algebra, class 3(a), with the ideal m = span{a1}",
                   "field Q\n"
                   "dim 3\n"
                   "basis a1 a2 a3\n"
                   "[1,3] = 1*1\n"
                   "[2,3] = 1*2\n"
                   "ideal 1*1\n",
                   {
                       {"z_lie", "span{}", false, ""},
                       {"k_lie", "span{a1}", false, ""},
                       {"stem", "true", false, ""},
                   }});

    cat.push_back({"lambda2",
                   "2-dimensional Leibniz algebra [a2,a2] = lambda a1, pinned at lambda = 2",
                   "field Q\n"
                   "dim 2\n"
                   "basis a1 a2\n"
                   "[2,2] = 2*1\n",
                   {
                       {"eps", "1", false, ""},
                       {"stem", "true", false, ""},
                   }});

    return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace lzb
