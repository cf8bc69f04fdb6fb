#pragma once

#include <string>

#include "qsymp/word.hpp"

namespace qsymp {

/// Parses an algebra expression over the generators of U'_q(sp_2n) or
/// U_q(gl_N).  Grammar: `s[i,j]`, `t[i,j]`, `tb[i,j]`, `^k` with integer k
/// (negative only on invertible generators), `*`, `+`, `-`, parentheses,
/// the symbol `q`, and rational literals `p` or `p/r`.
/// `rank` is n for the SP algebra and N for GL.
LinComb parse_expr(const std::string& text, Algebra algebra, int rank);

} // namespace qsymp
