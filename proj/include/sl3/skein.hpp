#pragma once

#include "sl3/surface.hpp"

#include <map>
#include <string>
#include <vector>

namespace sl3 {

// built-in triangulations: triangle, quadrilateral, pentagon, annulus11
DecoratedTriangulation builtin_triangulation(const std::string& name);

struct CatalogWeb {
    std::string name;
    IVec grading;
};
// elementary webs of a polygon, named as in the relation tables
std::vector<CatalogWeb> polygon_catalog(const std::string& tag);

struct WebDictionary {
    std::string tag;
    QuantumSeed root;
    IMat end_map;  // n x 2|M|: f_i -> gr(initial web i)
    std::map<std::string, TorusElement> entries;
    std::map<std::string, std::string> provenance;
    std::map<std::string, IVec> grading;
    std::vector<std::string> names() const;
    const TorusElement& at(const std::string& name) const;
};

// end(x): image of the common exponent class under end_map
IVec endpoint_class(const TorusElement& x, const IMat& end_map, bool* homogeneous = nullptr);

WebDictionary build_dictionary(const std::string& tag, const DecoratedTriangulation& d);
WebDictionary build_dictionary(const std::string& tag);

TorusElement evaluate_word(const WebDictionary& dict, const std::vector<std::string>& word, int qshift_twice = 0);

struct RhsTerm {
    int twice;                       // A^{twice/2}
    std::vector<std::string> names;  // Weyl-ordered product
};

struct RelationRow {
    std::string name;
    std::vector<std::string> left;
    std::vector<RhsTerm> right;
    std::string kind;  // q-commutation | exchange | other
};

struct RelationCheck {
    RelationRow row;
    bool pass = false;
    std::string lhs, rhs, note;
    std::string text() const;
};

std::vector<RelationRow> triangle_table();
std::vector<RelationRow> quadrilateral_table();
std::vector<RelationCheck> verify_table(const WebDictionary& dict, const std::vector<RelationRow>& rows);
std::vector<RelationCheck> verify_table(const std::string& tag);

struct LaurentDemo {
    int k = 0;
    TorusElement poly;
    bool positive = false;
};
// multiply by (t^eps)^k until no t^{-eps} remains
LaurentDemo triangle_laurent_demo(const std::vector<std::string>& word, int eps = +1);

std::string row_text(const RelationRow& r);

} // namespace sl3
