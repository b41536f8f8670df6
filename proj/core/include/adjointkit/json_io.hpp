#pragma once

#include <string>
#include <vector>

#include "adjointkit/freealg_verify.hpp"
#include "adjointkit/pfk.hpp"
#include "adjointkit/special.hpp"

namespace adjointkit {

// JSON writers. Every function returns a complete pretty-printed document
// with a trailing newline; key and term order is deterministic, so identical
// inputs produce byte-identical output.

std::string json_series(const TruncatedSeries<Rational> &s);
std::string json_series(const TruncatedSeries<RationalFunction> &s);

std::string json_pfk(const PfkPolynomial<Rational> &p);
std::string json_pfk(const PfkPolynomial<RationalFunction> &p);
std::string json_pfk_all(const std::vector<PfkPolynomial<Rational>> &ps);
std::string json_pfk_all(const std::vector<PfkPolynomial<RationalFunction>> &ps);

std::string json_roots(const RootSymmetrics<Rational> &r);
std::string json_roots(const RootSymmetrics<RationalFunction> &r);

std::string json_free(const FreeElement<Rational> &e);
std::string json_free(const FreeElement<RationalFunction> &e);
std::string json_adjoint(const AdjointResult<Rational> &a);
std::string json_adjoint(const AdjointResult<RationalFunction> &a);

std::string json_hl(const HLResult &h);
std::string json_report(const IdentityReport &r);
std::string json_error(errc code, const std::string &detail);

// Text writers for --format text.

std::string text_series(const TruncatedSeries<Rational> &s);
std::string text_series(const TruncatedSeries<RationalFunction> &s);
std::string text_pfk(const PfkPolynomial<Rational> &p);
std::string text_pfk(const PfkPolynomial<RationalFunction> &p);
std::string text_pfk_all(const std::vector<PfkPolynomial<Rational>> &ps);
std::string text_pfk_all(const std::vector<PfkPolynomial<RationalFunction>> &ps);
std::string text_roots(const RootSymmetrics<Rational> &r);
std::string text_roots(const RootSymmetrics<RationalFunction> &r);
std::string text_adjoint(const AdjointResult<Rational> &a);
std::string text_adjoint(const AdjointResult<RationalFunction> &a);
std::string text_hl(const HLResult &h);
std::string text_report(const IdentityReport &r);

} // namespace adjointkit
