#pragma once

// Text format for base rings, algebras, Hopf structure maps, and comodules.
//
//   ring R = Fp_pi(p=2, e=2);            // or Zmod(p=2, s=2)
//   algebra A over R = gens x^2 -> 0, y^4 -> 0;
//   comul x = (1 + y@1)^2 * x@2 + x@1;   // @k names the tensor slot
//   comul y = y@1 + y@2 + y@1 * y@2;
//   counit x = 0;
//   antipode x = -(1 + y)^-2 * x;        // negative powers invert units
//   comodule V over A = rank 2 action [[(1 + y)^2, -2 * x], [0, 1]];
//
// parse() yields the evaluated declarations (the canonical AST is the
// assembled presentation itself); print() emits the canonical form, and
// parse(print(parse(t))) reproduces the same declarations exactly.
//
// Diagnostics carry stable codes with 1-based line/column:
//   E001 missing ring declaration      E007 missing algebra declaration
//   E002 syntax error                  E008 inverse of a non-unit
//   E003 unknown identifier            E009 bad ring parameters
//   E004 duplicate declaration         E010 malformed structure declaration
//   E005 bad numeric literal           E011 bad comodule shape
//   E006 tensor slot error             E012 unexpected end of file

#include "ffgs/cohomology.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ffgs::dsl {

struct Diagnostic {
    std::string code;    // "E001" .. "E012"
    std::string message;
    size_t line = 1;
    size_t col = 1;
};

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(Diagnostic d);
    const Diagnostic& diag() const { return diag_; }

  private:
    Diagnostic diag_;
};

struct ComoduleDecl {
    std::string name;
    Comodule comodule;
};

struct SourceFile {
    std::string ring_name;
    BaseRing ring = BaseRing::fp(2);
    std::string algebra_name;
    HopfPresentation hopf; // assembled from the declarations
    std::vector<ComoduleDecl> comodules;
};

// Parse and assemble; throws ParseError with a stable diagnostic.
SourceFile parse(const std::string& text);
SourceFile parse_file(const std::string& path);

// Canonical form: declarations in fixed order, element terms in the
// monomial term order, coefficients split into unit and pi parts.
std::string print(const SourceFile& f);

// Wrap an existing presentation for printing / golden-file generation.
SourceFile wrap(std::string ring_name, std::string algebra_name,
                const HopfPresentation& G,
                std::vector<ComoduleDecl> comodules = {});

} // namespace ffgs::dsl
