#include "resolvekit/tables.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace resolvekit {

namespace {
    using K = ElementKind;

    // Rows are transcribed verbatim; L is the element index, A is aleph.

    constexpr TableRow prism_allied_even[] = {
        { K::p, "1", "1", { "L-1", "3", "4", "A+2", "A+1" } },
        { K::p, "2", "2", { "L-1", "L+1", "3", "A-L+4", "A+2" } },
        { K::p, "3", "A+1", { "L-1", "L+1", "L", "A-L+4", "A-L+5" } },
        { K::p, "A+2", "A+2", { "2A-L+1", "2A-L+4", "L", "L-A+1", "A-L+5" } },
        { K::p, "A+3", "2A", { "2A-L+1", "2A-L+4", "2A-L+5", "L-A+1", "L-A" } },

        { K::q, "1", "1", { "L", "2", "3", "A+1", "A" } },
        { K::q, "2", "2", { "L", "L", "2", "A-L+3", "A+1" } },
        { K::q, "3", "A+1", { "L", "L", "L-1", "A-L+3", "A-L+4" } },
        { K::q, "A+2", "A+2", { "2A-L+2", "2A-L+3", "L-1", "L-A", "A-L+4" } },
        { K::q, "A+3", "2A", { "2A-L+2", "2A-L+3", "2A-L+4", "L-A", "L-A-1" } },

        { K::r, "1", "1", { "L+1", "1", "3", "A-L+3", "A+1" } },
        { K::r, "2", "2", { "L+1", "L+1", "1", "A-L+3", "A-L+4" } },
        { K::r, "3", "A", { "L+1", "L+1", "L", "A-L+3", "A-L+4" } },
        { K::r, "A+1", "A+1", { "2A-L+2", "L+1", "L", "1", "A-L+4" } },
        { K::r, "A+2", "A+2", { "2A-L+2", "2A-L+3", "L", "L-A+1", "1" } },
        { K::r, "A+3", "2A", { "2A-L+2", "2A-L+3", "2A-L+4", "L-A+1", "L-A" } },

        { K::s, "1", "1", { "L+2", "0", "4", "A-L+4", "A+2" } },
        { K::s, "2", "2", { "L+2", "L+2", "0", "A-L+4", "A-L+5" } },
        { K::s, "3", "A", { "L+2", "L+2", "L+1", "A-L+4", "A-L+5" } },
        { K::s, "A+1", "A+1", { "2A-L+3", "2A-L+4", "L+1", "0", "A-L+5" } },
        { K::s, "A+2", "A+2", { "2A-L+3", "2A-L+4", "2A-L+5", "L-A+2", "0" } },
        { K::s, "A+3", "2A", { "2A-L+3", "2A-L+4", "2A-L+5", "L-A+2", "L-A+1" } },

        { K::pp, "1", "1", { "L-1", "3", "3", "A-L+3", "A+1" } },
        { K::pp, "2", "2", { "L-1", "L+1", "3", "A-L+3", "A-L+4" } },
        { K::pp, "3", "A", { "L-1", "L+1", "L", "A-L+3", "A-L+4" } },
        { K::pp, "A+1", "A+1", { "2A-L", "2A-L+3", "L", "3", "A-L+4" } },
        { K::pp, "A+2", "A+2", { "2A-L", "2A-L+3", "2A-L+4", "L-A+1", "3" } },
        { K::pp, "A+3", "2A", { "2A-L", "2A-L+3", "2A-L+4", "L-A+1", "L-A" } },

        { K::pq, "1", "1", { "L-1", "2", "3", "A+1", "A" } },
        { K::pq, "2", "2", { "L-1", "L", "2", "A-L+3", "A+1" } },
        { K::pq, "3", "A+1", { "L-1", "L", "L-1", "A-L+3", "A-L+4" } },
        { K::pq, "A+2", "A+2", { "2A-L+1", "2A-L+3", "L-1", "L-A", "A-L+4" } },
        { K::pq, "A+3", "2A", { "2A-L+1", "2A-L+3", "2A-L+4", "L-A", "L-A-1" } },

        { K::qq, "1", "1", { "L", "2", "2", "A-L+2", "A" } },
        { K::qq, "2", "2", { "L", "L", "2", "A-L+2", "A-L+3" } },
        { K::qq, "3", "A", { "L", "L", "L-1", "A-L+2", "A-L+3" } },
        { K::qq, "A+1", "A+1", { "2A-L+1", "2A-L+2", "L-1", "2", "A-L+3" } },
        { K::qq, "A+2", "A+2", { "2A-L+1", "2A-L+2", "2A-L+3", "L-A", "2" } },
        { K::qq, "A+3", "2A", { "2A-L+1", "2A-L+2", "2A-L+3", "L-A", "L-A-1" } },

        { K::qr, "1", "1", { "L", "1", "3", "A+1", "A" } },
        { K::qr, "2", "2", { "L", "L", "3", "A-L+2", "A-L+4" } },
        { K::qr, "3", "A", { "L", "L", "L-1", "A-L+3", "A-L+4" } },
        { K::qr, "A+1", "A+1", { "L", "L", "L-1", "1", "A-L+4" } },
        { K::qr, "A+2", "A+2", { "2A-L+2", "2A-L+3", "L-1", "L-A", "1" } },
        { K::qr, "A+3", "2A", { "2A-L+2", "2A-L+3", "2A-L+4", "L-A", "L-A-1" } },

        { K::rq, "1", "1", { "L+1", "1", "2", "A-L+2", "A+1" } },
        { K::rq, "2", "2", { "L+1", "L+1", "1", "A-L+2", "A-L+3" } },
        { K::rq, "3", "A", { "L+1", "L+1", "L", "A-L+2", "A-L+3" } },
        { K::rq, "A+1", "A+1", { "2A-L+1", "2A-L+2", "L", "1", "A-L+3" } },
        { K::rq, "A+2", "A+2", { "2A-L+1", "2A-L+2", "2A-L+3", "L-A+1", "1" } },
        { K::rq, "A+3", "2A", { "2A-L+1", "2A-L+2", "2A-L+3", "L-A+1", "L-A" } },

        { K::rs, "1", "1", { "L+1", "0", "3", "A-L+3", "A+1" } },
        { K::rs, "2", "2", { "L+1", "L+1", "0", "A-L+3", "A-L+4" } },
        { K::rs, "3", "A", { "L+1", "L+1", "L", "A-L+3", "A-L+4" } },
        { K::rs, "A+1", "A+1", { "2A-L+2", "2A-L+3", "L", "0", "A-L+4" } },
        { K::rs, "A+2", "A+2", { "2A-L+2", "2A-L+3", "2A-L+4", "L-A+1", "0" } },
        { K::rs, "A+3", "2A", { "2A-L+2", "2A-L+3", "2A-L+4", "L-A+1", "L-A" } },
    };

    constexpr TableRow prism_allied_odd[] = {
        { K::p, "1", "1", { "L-1", "3", "4", "A-L+4", "A+2" } },
        { K::p, "2", "2", { "L-1", "L+1", "3", "A-L+4", "A-L+5" } },
        { K::p, "3", "A+1", { "L-1", "L+1", "L", "A-L+4", "A-L+5" } },
        { K::p, "A+2", "A+2", { "2A-L+2", "2A-L+5", "L", "L-A+1", "A-L+5" } },
        { K::p, "A+3", "2A+1", { "2A-L+2", "2A-L+5", "2A-L+6", "L-A+1", "L-A" } },

        { K::q, "1", "1", { "L", "2", "3", "A-L+3", "A+1" } },
        { K::q, "2", "2", { "L", "L", "2", "A-L+3", "A-L+4" } },
        { K::q, "3", "A+1", { "L", "L", "L-1", "A-L+3", "A-L+4" } },
        { K::q, "A+2", "A+2", { "2A-L+3", "2A-L+4", "L-1", "L-A", "A-L+4" } },
        { K::q, "A+3", "2A+1", { "2A-L+3", "2A-L+4", "2A-L+5", "L-A", "L-A-1" } },

        { K::r, "1", "1", { "L+1", "1", "3", "A-L+3", "A+2" } },
        { K::r, "2", "2", { "L+1", "L+1", "1", "A-L+3", "A-L+4" } },
        { K::r, "3", "A", { "L+1", "L+1", "L", "A-L+3", "A-L+4" } },
        { K::r, "A+1", "A+1", { "L+1", "L+1", "L", "1", "A-L+4" } },
        { K::r, "A+2", "A+2", { "2A-L+3", "2A-L+4", "L", "L-A+1", "1" } },
        { K::r, "A+3", "2A+1", { "2A-L+3", "2A-L+4", "2A-L+5", "L-A+1", "L-A" } },

        { K::s, "1", "1", { "L+2", "0", "4", "A-L+4", "A+3" } },
        { K::s, "2", "2", { "L+2", "L+2", "0", "A-L+4", "A-L+5" } },
        { K::s, "3", "A", { "L+2", "L+2", "L+1", "A-L+4", "A-L+5" } },
        { K::s, "A+1", "A+1", { "L+2", "L+2", "L+1", "0", "A-L+5" } },
        { K::s, "A+2", "A+2", { "2A-L+4", "2A-L+5", "L+1", "L-A+2", "0" } },
        { K::s, "A+3", "2A+1", { "2A-L+4", "2A-L+5", "2A-L+6", "L-A+2", "L-A+1" } },

        { K::pp, "1", "1", { "L-1", "3", "3", "A-L+3", "A+2" } },
        { K::pp, "2", "2", { "L-1", "L+1", "3", "A-L+3", "A-L+4" } },
        { K::pp, "3", "A", { "L-1", "L+1", "L", "A-L+3", "A-L+4" } },
        { K::pp, "A+1", "A+1", { "2A-L+1", "L+1", "L", "3", "A-L+4" } },
        { K::pp, "A+2", "A+2", { "2A-L+1", "2A-L+4", "L", "L-A+1", "3" } },
        { K::pp, "A+3", "2A+1", { "2A-L+1", "2A-L+4", "2A-L+5", "L-A+1", "L-A" } },

        { K::pq, "1", "1", { "L-1", "2", "3", "A-L+3", "A+1" } },
        { K::pq, "2", "2", { "L-1", "L", "2", "A-L+3", "A-L+4" } },
        { K::pq, "3", "A+1", { "L-1", "L", "L-1", "A-L+3", "A-L+4" } },
        { K::pq, "A+2", "A+2", { "2A-L+2", "2A-L+4", "L-1", "L-A", "A-L+4" } },
        { K::pq, "A+3", "2A+1", { "2A-L+2", "2A-L+4", "2A-L+5", "L-A", "L-A-1" } },

        { K::qq, "1", "1", { "L", "2", "2", "A-L+2", "A+1" } },
        { K::qq, "2", "2", { "L", "L", "2", "A-L+2", "A-L+3" } },
        { K::qq, "3", "A", { "L", "L", "L-1", "A-L+2", "A-L+3" } },
        { K::qq, "A+1", "A+1", { "2A-L+2", "L", "L-1", "2", "A-L+3" } },
        { K::qq, "A+2", "A+2", { "2A-L+2", "2A-L+3", "L-1", "L-A", "2" } },
        { K::qq, "A+3", "2A+1", { "2A-L+2", "2A-L+3", "2A-L+4", "L-A", "L-A-1" } },

        { K::qr, "1", "1", { "L", "1", "3", "A-L+3", "A+1" } },
        { K::qr, "2", "2", { "L", "L", "1", "A-L+3", "A-L+4" } },
        { K::qr, "3", "A", { "L", "L", "L-1", "A-L+3", "A-L+4" } },
        { K::qr, "A+1", "A+1", { "L", "L", "L-1", "1", "A-L+4" } },
        { K::qr, "A+2", "A+2", { "2A-L+3", "2A-L+4", "L-1", "L-A", "1" } },
        { K::qr, "A+3", "2A+1", { "2A-L+3", "2A-L+4", "2A-L+5", "L-A", "L-A-1" } },

        { K::rq, "1", "1", { "L+1", "1", "2", "A-L+2", "A-L+3" } },
        { K::rq, "2", "2", { "L+1", "L+1", "1", "A-L+2", "A-L+3" } },
        { K::rq, "3", "A", { "L+1", "L+1", "L", "A-L+2", "A-L+3" } },
        { K::rq, "A+1", "A+1", { "2A-L+2", "2A-L+3", "L", "1", "A-L+3" } },
        { K::rq, "A+2", "A+2", { "2A-L+2", "2A-L+3", "2A-L+4", "L-A+1", "1" } },
        { K::rq, "A+3", "2A+1", { "2A-L+2", "2A-L+3", "2A-L+4", "L-A+1", "L-A" } },

        { K::rs, "1", "1", { "L+1", "0", "3", "A-L+3", "A+2" } },
        { K::rs, "2", "2", { "L+1", "L+1", "0", "A-L+3", "A-L+4" } },
        { K::rs, "3", "A", { "L+1", "L+1", "L", "A-L+3", "A-L+4" } },
        { K::rs, "A+1", "A+1", { "L+1", "L+1", "L", "0", "A-L+4" } },
        { K::rs, "A+2", "A+2", { "2A-L+3", "2A-L+4", "L", "L-A+1", "0" } },
        { K::rs, "A+3", "2A+1", { "2A-L+3", "2A-L+4", "2A-L+5", "L-A+1", "L-A" } },
    };

    constexpr TableRow web_even[] = {
        { K::p, "1", "1", { "L-1", "L+1", "3", "A-L+3", "A+1" } },
        { K::p, "2", "A+1", { "L-1", "L+1", "L", "A-L+3", "A-L+4" } },
        { K::p, "A+2", "A+2", { "2A-L+1", "2A-L+3", "L", "L-A+1", "A-L+4" } },
        { K::p, "A+3", "2A", { "2A-L+1", "2A-L+3", "2A-L+4", "L-A+1", "L-A" } },

        { K::q, "1", "1", { "L", "L", "2", "A-L+2", "A" } },
        { K::q, "2", "A+1", { "L", "L", "L-1", "A-L+2", "A-L+3" } },
        { K::q, "A+2", "A+2", { "2A-L+2", "2A-L+2", "L-1", "L-A", "A-L+3" } },
        { K::q, "A+3", "2A", { "2A-L+2", "2A-L+2", "2A-L+3", "L-A", "L-A-1" } },

        { K::r, "1", "1", { "L+1", "0", "3", "A-L+3", "A+1" } },
        { K::r, "2", "2", { "L+1", "L+1", "0", "A-L+3", "A-L+4" } },
        { K::r, "3", "A", { "L+1", "L+1", "L", "A-L+3", "A-L+4" } },
        { K::r, "A+1", "A+1", { "L+1", "L+1", "L", "0", "A-L+4" } },
        { K::r, "A+2", "A+2", { "2A-L+3", "2A-L+3", "L", "L-A+1", "0" } },
        { K::r, "A+3", "2A", { "2A-L+3", "2A-L+3", "2A-L+4", "L-A+1", "L-A" } },

        { K::pp, "1", "1", { "L-1", "L+1", "2", "A-L+2", "A+1" } },
        { K::pp, "2", "A", { "L-1", "L+1", "L", "A-L+2", "A-L+3" } },
        { K::pp, "A+1", "A+1", { "2A-L", "2A-L+2", "L", "L-A+1", "A-L+3" } },
        { K::pp, "A+2", "2A", { "2A-L", "2A-L+2", "2A-L+3", "L-A+1", "L-A" } },

        // no row is printed for L = 2
        { K::pq, "1", "1", { "L-1", "L", "2", "A-L+2", "A" } },
        { K::pq, "3", "A+1", { "L-1", "L", "L-1", "A-L+2", "A-L+3" } },
        { K::pq, "A+2", "A+2", { "2A-L+1", "2A-L+2", "L-1", "L-A", "A-L+3" } },
        { K::pq, "A+3", "2A", { "2A-L+1", "2A-L+2", "2A-L+3", "L-A", "L-A-1" } },

        { K::qq, "1", "1", { "L", "L", "1", "A-L+1", "A" } },
        { K::qq, "2", "A", { "L", "L", "L-1", "A-L+1", "A-L+2" } },
        { K::qq, "A+1", "A+1", { "2A-L+1", "2A-L+1", "L-1", "L-A", "A-L+2" } },
        { K::qq, "A+2", "2A", { "2A-L+1", "2A-L+1", "2A-L+2", "L-A", "L-A-1" } },

        { K::qr, "1", "1", { "L", "0", "2", "A-L+2", "A" } },
        { K::qr, "2", "2", { "L", "L", "0", "A-L+2", "A-L+3" } },
        { K::qr, "3", "A", { "L", "L", "L-1", "A-L+2", "A-L+3" } },
        { K::qr, "A+1", "A+1", { "L", "L", "L-1", "0", "A-L+3" } },
        { K::qr, "A+2", "A+2", { "2A-L+2", "2A-L+2", "L-1", "L-A", "0" } },
        { K::qr, "A+3", "2A", { "2A-L+2", "2A-L+2", "2A-L+3", "L-A", "L-A-1" } },
    };

    constexpr TableRow web_odd[] = {
        { K::p, "1", "1", { "L-1", "L+1", "3", "A-L+3", "A+2" } },
        { K::p, "2", "A+1", { "L-1", "L+1", "L", "A-L+3", "A-L+4" } },
        { K::p, "A+2", "A+2", { "2A-L+2", "2A-L+4", "L", "L-A+1", "A-L+4" } },
        { K::p, "A+3", "2A+1", { "2A-L+2", "2A-L+4", "2A-L+5", "L-A+1", "L-A" } },

        { K::q, "1", "1", { "L", "L", "2", "A-L+2", "A+1" } },
        { K::q, "2", "A+1", { "L", "L", "L-1", "A-L+2", "A-L+3" } },
        { K::q, "A+2", "A+2", { "2A-L+3", "2A-L+3", "L-1", "L-A", "A-L+3" } },
        { K::q, "A+3", "2A+1", { "2A-L+3", "2A-L+3", "2A-L+4", "L-A", "L-A-1" } },

        { K::r, "1", "1", { "L+1", "0", "3", "A-L+3", "A+2" } },
        { K::r, "2", "2", { "L+1", "L+1", "0", "A-L+3", "A-L+4" } },
        { K::r, "3", "A", { "L+1", "L+1", "L", "A-L+3", "A-L+4" } },
        { K::r, "A+1", "A+1", { "L+1", "L+1", "L", "0", "A-L+4" } },
        { K::r, "A+2", "A+2", { "2A-L+4", "2A-L+4", "L", "L-A+1", "0" } },
        { K::r, "A+3", "2A+1", { "2A-L+4", "2A-L+4", "2A-L+5", "L-A+1", "L-A" } },

        { K::pp, "1", "1", { "L-1", "L+1", "2", "A-L+2", "A-L+3" } },
        { K::pp, "2", "A", { "L-1", "L+1", "L", "A-L+2", "A-L+3" } },
        { K::pp, "A+1", "A+1", { "L-1", "L+1", "L", "L-A+1", "A-L+3" } },
        { K::pp, "A+2", "A+2", { "2A-L+1", "2A-L+3", "L", "L-A+1", "L-A" } },
        { K::pp, "A+3", "2A+1", { "2A-L+1", "2A-L+3", "2A-L+4", "L-A+1", "L-A" } },

        { K::pq, "1", "1", { "L-1", "L", "2", "A-L+2", "A+1" } },
        { K::pq, "2", "A+1", { "L-1", "L", "L-1", "A-L+2", "A-L+3" } },
        { K::pq, "A+2", "A+2", { "2A-L+2", "2A-L+3", "L-1", "L-A", "A-L+3" } },
        { K::pq, "A+3", "2A+1", { "2A-L+2", "2A-L+3", "2A-L+4", "L-A", "L-A-1" } },

        { K::qq, "1", "1", { "L", "L", "1", "A-L+1", "A-L+2" } },
        { K::qq, "2", "A", { "L", "L", "L-1", "A-L+1", "A-L+2" } },
        { K::qq, "A+1", "A+1", { "L", "L", "L-1", "L-A", "A-L+2" } },
        { K::qq, "A+2", "A+2", { "2A-L+2", "2A-L+2", "L-1", "L-A", "L-A-1" } },
        { K::qq, "A+3", "2A+1", { "2A-L+2", "2A-L+2", "2A-L+3", "L-A", "L-A-1" } },

        { K::qr, "1", "1", { "L", "0", "2", "A-L+2", "A+1" } },
        { K::qr, "2", "2", { "L", "L", "0", "A-L+2", "A-L+3" } },
        { K::qr, "3", "A", { "L", "L", "L-1", "A-L+2", "A-L+3" } },
        { K::qr, "A+1", "A+1", { "L", "L", "L-1", "0", "A-L+3" } },
        { K::qr, "A+2", "A+2", { "2A-L+3", "2A-L+3", "L-1", "L-A", "0" } },
        { K::qr, "A+3", "2A+1", { "2A-L+3", "2A-L+3", "2A-L+4", "L-A", "L-A-1" } },
    };

    auto require_table_range(Family family, int n) -> void
    {
        if (family != Family::prism_allied && family != Family::web)
            throw Error(ErrorKind::Usage, "code tables exist for prism_allied and web only");
        if (n < 6)
            throw Error(ErrorKind::NBelowTableRange, "code tables start at n = 6, got " + std::to_string(n));
    }

    auto class_of(ElementKind kind) -> VertexClass
    {
        switch (kind) {
        case K::p: return VertexClass::p;
        case K::q: return VertexClass::q;
        case K::r: return VertexClass::r;
        default: return VertexClass::s;
        }
    }

    /// Endpoint labels of an edge kind, in naming order.
    auto endpoints(const TableElement& e) -> std::pair<VertexLabel, VertexLabel>
    {
        auto i = e.index;
        switch (e.kind) {
        case K::pp: return { { VertexClass::p, i }, { VertexClass::p, i + 1 } };
        case K::pq: return { { VertexClass::p, i }, { VertexClass::q, i } };
        case K::qq: return { { VertexClass::q, i }, { VertexClass::q, i + 1 } };
        case K::qr: return { { VertexClass::q, i }, { VertexClass::r, i } };
        case K::rq: return { { VertexClass::r, i }, { VertexClass::q, i + 1 } };
        case K::rs: return { { VertexClass::r, i }, { VertexClass::s, i } };
        default: throw Error(ErrorKind::UnknownRow, "not an edge kind");
        }
    }

    auto pair_of(const std::vector<TableElement>& by_position, std::size_t a, std::size_t b) -> CollisionPair
    {
        return { by_position[std::min(a, b)], by_position[std::max(a, b)] };
    }

    struct DisjointSets {
        std::vector<std::size_t> parent;
        explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
        auto find(std::size_t x) -> std::size_t
        {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        }
        auto unite(std::size_t a, std::size_t b) -> void { parent[find(a)] = find(b); }
    };
}

auto to_string(ElementKind kind) -> std::string_view
{
    switch (kind) {
    case K::p: return "p";
    case K::q: return "q";
    case K::r: return "r";
    case K::s: return "s";
    case K::pp: return "pp";
    case K::pq: return "pq";
    case K::qq: return "qq";
    case K::qr: return "qr";
    case K::rq: return "rq";
    case K::rs: return "rs";
    }
    return "?";
}

auto is_vertex_kind(ElementKind kind) -> bool
{
    return kind == K::p || kind == K::q || kind == K::r || kind == K::s;
}

auto label(const TableElement& e, int n) -> std::string
{
    if (is_vertex_kind(e.kind))
        return to_string(VertexLabel{ class_of(e.kind), e.index });
    auto [a, b] = endpoints(e);
    a.index = wrap_index(a.index, n);
    b.index = wrap_index(b.index, n);
    return to_string(a) + to_string(b);
}

auto classify(const Graph& g, const GraphElement& el) -> TableElement
{
    if (auto v = std::get_if<VertexId>(&el)) {
        auto l = g.label_of(*v);
        switch (l.cls) {
        case VertexClass::p: return { K::p, l.index };
        case VertexClass::q: return { K::q, l.index };
        case VertexClass::r: return { K::r, l.index };
        case VertexClass::s: return { K::s, l.index };
        }
    }
    auto& e = std::get<Edge>(el);
    auto a = g.label_of(e.u), b = g.label_of(e.v);
    if (b.cls < a.cls)
        std::swap(a, b);
    // the partner of index i in the cycle classes is i + 1 wrapped
    auto n = static_cast<int>(g.class_members(VertexClass::p).size());
    auto next = [n] (int i) { return wrap_index(i + 1, n); };

    if (a.cls == b.cls && (a.cls == VertexClass::p || a.cls == VertexClass::q)) {
        auto kind = a.cls == VertexClass::p ? K::pp : K::qq;
        return { kind, next(a.index) == b.index ? a.index : b.index };
    }
    if (a.cls == VertexClass::p && b.cls == VertexClass::q)
        return { K::pq, a.index };
    if (a.cls == VertexClass::q && b.cls == VertexClass::r)
        return a.index == b.index ? TableElement{ K::qr, b.index } : TableElement{ K::rq, b.index };
    if (a.cls == VertexClass::r && b.cls == VertexClass::s)
        return { K::rs, a.index };
    throw Error(ErrorKind::UnknownRow, "edge " + element_to_string(g, el) + " has no table class");
}

auto element_of(const Graph& g, const TableElement& e) -> GraphElement
{
    auto n = static_cast<int>(g.class_members(VertexClass::p).size());
    if (is_vertex_kind(e.kind))
        return g.id_of({ class_of(e.kind), wrap_index(e.index, n) });
    auto [a, b] = endpoints(e);
    a.index = wrap_index(a.index, n);
    b.index = wrap_index(b.index, n);
    Edge edge{ g.id_of(a), g.id_of(b) };
    if (! g.edge_index(edge))
        throw Error(ErrorKind::UnknownLabel, label(e, n) + " is not an edge of this graph");
    return edge;
}

auto reference_set(Family family, int n) -> ReferenceSet
{
    require_table_range(family, n);
    ReferenceSet ref;
    ref.family = family;
    ref.n = n;
    ref.aleph = n / 2;
    auto pendant = pendant_class(family);
    ref.labels = { VertexLabel{ VertexClass::p, 1 }, VertexLabel{ pendant, 1 }, VertexLabel{ pendant, 2 },
        VertexLabel{ pendant, wrap_index(ref.aleph + 1, n) }, VertexLabel{ pendant, wrap_index(ref.aleph + 2, n) } };
    auto g = make_family(family, n);
    std::vector<VertexId> ids;
    for (auto& l : ref.labels)
        ids.push_back(g.id_of(l));
    ref.landmarks = LandmarkSet{ std::move(ids) };
    return ref;
}

auto table_rows(Family family, bool even) -> std::span<const TableRow>
{
    if (family == Family::prism_allied)
        return even ? std::span<const TableRow>(prism_allied_even) : std::span<const TableRow>(prism_allied_odd);
    if (family == Family::web)
        return even ? std::span<const TableRow>(web_even) : std::span<const TableRow>(web_odd);
    throw Error(ErrorKind::Usage, "code tables exist for prism_allied and web only");
}

auto evaluate_formula(std::string_view formula, int index, int aleph) -> int
{
    int total = 0;
    std::size_t pos = 0;
    auto bad = [&] { return Error(ErrorKind::ParseError, "malformed formula '" + std::string(formula) + "'"); };
    if (formula.empty())
        throw bad();
    while (pos < formula.size()) {
        int sign = 1;
        if (formula[pos] == '+' || formula[pos] == '-') {
            sign = formula[pos] == '-' ? -1 : 1;
            ++pos;
        }
        else if (pos != 0)
            throw bad();
        int coefficient = 1;
        bool has_number = false;
        if (pos < formula.size() && std::isdigit(static_cast<unsigned char>(formula[pos]))) {
            auto [end, ec] = std::from_chars(formula.data() + pos, formula.data() + formula.size(), coefficient);
            if (ec != std::errc{})
                throw bad();
            pos = static_cast<std::size_t>(end - formula.data());
            has_number = true;
        }
        int factor = 1;
        if (pos < formula.size() && (formula[pos] == 'L' || formula[pos] == 'A'))
            factor = formula[pos++] == 'L' ? index : aleph;
        else if (! has_number)
            throw bad();
        total += sign * coefficient * factor;
    }
    return total;
}

auto closed_form_code(Family family, int n, const TableElement& element) -> TableCode
{
    require_table_range(family, n);
    auto aleph = n / 2;
    auto index = wrap_index(element.index, n);

    const TableRow* chosen = nullptr;
    bool chosen_single = false;
    for (auto& row : table_rows(family, n % 2 == 0)) {
        if (row.kind != element.kind)
            continue;
        auto first = evaluate_formula(row.first, 0, aleph);
        auto last = evaluate_formula(row.last, 0, aleph);
        if (index < first || index > last)
            continue;
        auto single = first == last;
        if (! chosen || (single && ! chosen_single)) {
            chosen = &row;
            chosen_single = single;
        }
    }
    if (! chosen)
        throw Error(ErrorKind::UnknownRow, "no table row covers " + label(element, n) + " for "
                + std::string(to_string(family)) + "(" + std::to_string(n) + ")");

    TableCode code;
    for (std::size_t i = 0; i < code.size(); ++i)
        code[i] = evaluate_formula(chosen->coordinates[i], index, aleph);
    return code;
}

auto CodeComparison::matches() const -> bool
{
    if (! table || oracle.size() != table->size())
        return false;
    return std::equal(oracle.begin(), oracle.end(), table->begin(),
            [] (Distance a, int b) { return b >= 0 && a == static_cast<Distance>(b); });
}

auto compare_codes(Family family, int n) -> std::vector<CodeComparison>
{
    auto ref = reference_set(family, n);
    auto g = make_family(family, n);
    DistanceMatrix d(g);

    std::vector<CodeComparison> result;
    for (auto& el : element_universe(g, ResolutionMode::mixed)) {
        CodeComparison row;
        row.element = classify(g, el);
        row.graph_element = el;
        row.oracle = mixed_code(d, el, ref.landmarks);
        try {
            row.table = closed_form_code(family, n, row.element);
        }
        catch (const Error& e) {
            if (e.kind() != ErrorKind::UnknownRow)
                throw;
        }
        result.push_back(std::move(row));
    }
    return result;
}

auto CensusReport::matches() const -> bool
{
    return unexpected.empty() && missing.empty() && unseparated.empty() && full_basis_collisions.empty();
}

auto collision_census(Family family, int n) -> CensusReport
{
    auto ref = reference_set(family, n);
    auto g = make_family(family, n);
    DistanceMatrix d(g);
    auto universe = element_universe(g, ResolutionMode::mixed);

    CensusReport report;
    report.family = family;
    report.n = n;
    report.aleph = ref.aleph;

    std::vector<TableElement> names;
    std::map<TableElement, std::size_t> position;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        names.push_back(classify(g, universe[i]));
        position[names.back()] = i;
    }
    auto at = [&] (ElementKind kind, int index) { return position.at({ kind, wrap_index(index, n) }); };

    auto groups_under = [&] (const LandmarkSet& landmarks) {
        std::map<MixedCode, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < universe.size(); ++i)
            groups[mixed_code(d, universe[i], landmarks)].push_back(i);
        return groups;
    };

    std::set<CollisionPair> observed;
    for (auto& [code, members] : groups_under(ref.landmarks))
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                observed.insert(pair_of(names, members[a], members[b]));

    // predicted equalities for every index whose pendant is not a landmark
    std::set<int> landmark_indices;
    for (auto& l : ref.labels)
        if (l.cls != VertexClass::p)
            landmark_indices.insert(l.index);

    DisjointSets sets(universe.size());
    std::map<std::size_t, std::set<int>> sources;
    auto predict = [&] (std::size_t a, std::size_t b, int index) {
        sets.unite(a, b);
        sources[a].insert(index);
        sources[b].insert(index);
    };
    for (int i = 1; i <= n; ++i) {
        if (landmark_indices.contains(i))
            continue;
        predict(at(K::q, i), at(K::qr, i), i);
        if (family == Family::prism_allied) {
            predict(at(K::q, i + 1), at(K::rq, i), i);
            predict(at(K::r, i), at(K::rs, i), i);
        }
    }

    std::map<std::size_t, std::vector<std::size_t>> components;
    for (std::size_t i = 0; i < universe.size(); ++i)
        components[sets.find(i)].push_back(i);
    std::set<CollisionPair> predicted;
    for (auto& [root, members] : components)
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                predicted.insert(pair_of(names, members[a], members[b]));

    report.observed.assign(observed.begin(), observed.end());
    report.predicted.assign(predicted.begin(), predicted.end());
    std::set_difference(observed.begin(), observed.end(), predicted.begin(), predicted.end(),
            std::back_inserter(report.unexpected));
    std::set_difference(predicted.begin(), predicted.end(), observed.begin(), observed.end(),
            std::back_inserter(report.missing));

    // each observed collision must split once the pendant of a producing index joins
    auto pendant = pendant_class(family);
    for (auto& pair : report.observed) {
        auto a = position.at(pair.first), b = position.at(pair.second);
        std::set<int> indices;
        for (auto side : { a, b })
            if (auto it = sources.find(side); it != sources.end())
                indices.insert(it->second.begin(), it->second.end());
        bool split = false;
        for (auto i : indices) {
            auto extended = ref.landmarks.with(g.id_of({ pendant, i }));
            if (mixed_code(d, universe[a], extended) != mixed_code(d, universe[b], extended)) {
                split = true;
                break;
            }
        }
        if (! split)
            report.unseparated.push_back(pair);
    }

    std::vector<VertexId> full{ g.id_of({ VertexClass::p, 1 }) };
    for (auto v : g.class_members(pendant))
        full.push_back(v);
    for (auto& [code, members] : groups_under(LandmarkSet{ full }))
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                report.full_basis_collisions.push_back(pair_of(names, members[a], members[b]));
    std::sort(report.full_basis_collisions.begin(), report.full_basis_collisions.end());

    return report;
}

auto require_census_match(const CensusReport& report) -> void
{
    if (report.matches())
        return;
    std::ostringstream out;
    out << to_string(report.family) << "(" << report.n << ") collision census differs from prediction:";
    auto list = [&] (std::string_view what, const std::vector<CollisionPair>& pairs) {
        for (auto& p : pairs)
            out << "\n  " << what << " " << label(p.first, report.n) << " ~ " << label(p.second, report.n);
    };
    list("unexpected", report.unexpected);
    list("missing", report.missing);
    list("unseparated", report.unseparated);
    list("full-basis", report.full_basis_collisions);
    throw Error(ErrorKind::CensusMismatch, out.str());
}

auto validate_tables(Family family, int n) -> ValidationReport
{
    ValidationReport report;
    report.family = family;
    report.n = n;
    report.aleph = n / 2;
    report.even = n % 2 == 0;
    for (auto& row : compare_codes(family, n)) {
        ++report.elements_checked;
        if (! row.matches())
            report.mismatches.push_back({ row.element, row.table, row.oracle });
    }
    report.census = collision_census(family, n);
    return report;
}

} // namespace resolvekit
