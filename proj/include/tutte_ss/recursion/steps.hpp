#pragma once

// Triple recursions written once over any commutative ring R that supports
// R + R, R - R, R * R and scaled(R, long). They are instantiated for BiPoly
// (symbolic), Rational (point evaluation) and UniPoly (chromatic in lambda).
//
// u stands for x - 1 and w for y - 1 evaluated in R.

#include "tutte_ss/recursion/family.hpp"
#include "tutte_ss/recursion/ring_ops.hpp"

#include <functional>

namespace tutte_ss {

template <class R>
struct ReducedValues {
  R t2;
  R n;  // t1 = u n
  R m;  // t0 = u^2 m
};

template <class R>
struct FullValues {
  R t2;
  R t1;
  R t0;
};

// All ten cubic monomials in (a, b, c).
template <class R>
struct Cubics {
  R aaa, aab, abb, bbb, aac, abc, bbc, acc, bcc, ccc;

  Cubics(const R& a, const R& b, const R& c) {
    R aa = a * a;
    R bb = b * b;
    R cc = c * c;
    aaa = aa * a;
    aab = aa * b;
    abb = a * bb;
    bbb = bb * b;
    aac = aa * c;
    abc = (a * b) * c;
    bbc = bb * c;
    acc = a * cc;
    bcc = b * cc;
    ccc = cc * c;
  }
};

namespace detail {

// sum k_i * r_i
template <class R>
R lincomb(std::initializer_list<std::pair<long, const R*>> parts) {
  R acc = scaled(*parts.begin()->second, parts.begin()->first);
  for (auto it = parts.begin() + 1; it != parts.end(); ++it) acc = acc + scaled(*it->second, it->first);
  return acc;
}

// c0 + u (c1 + u (c2 + ...)), coefficients ascending in u.
template <class R>
R horner(const R& u, std::initializer_list<R> ascending) {
  auto it = ascending.end();
  R acc = *--it;
  while (it != ascending.begin()) acc = *--it + u * acc;
  return acc;
}

}  // namespace detail

// Division-free recursion in (t2, n, m). perturb adds perturb * t2^2 n to
// the t2 update; it exists only so verification can prove it catches a
// wrong coefficient.
template <class R>
ReducedValues<R> reduced_step(Family family, const ReducedValues<R>& in, const R& u, const R& w, long perturb = 0) {
  using detail::horner;
  using detail::lincomb;
  const Cubics<R> k(in.t2, in.n, in.m);
  // Letters: a = t2, b = n, c = m.
  ReducedValues<R> out;
  if (family == Family::sierpinski) {
    out.t2 = w * k.aaa + horner<R>(u, {lincomb<R>({{6, &k.aab}}), scaled(k.abb, 3)});
    out.n = w * k.aab +
            horner<R>(u, {lincomb<R>({{1, &k.aac}, {7, &k.abb}}), lincomb<R>({{2, &k.abc}, {4, &k.bbb}}), k.bbc});
    out.m = w * (scaled(k.abb, 3) + u * k.bbb) +
            horner<R>(u, {lincomb<R>({{12, &k.abc}, {14, &k.bbb}}), lincomb<R>({{3, &k.acc}, {24, &k.bbc}}),
                          scaled(k.bcc, 9), k.ccc});
  } else {
    out.t2 = w * k.aaa + horner<R>(u, {lincomb<R>({{3, &k.aaa}, {6, &k.aab}}), lincomb<R>({{6, &k.aab}, {3, &k.abb}}),
                                       scaled(k.abb, 3)});
    out.n = w * k.aab +
            horner<R>(u, {
                             lincomb<R>({{1, &k.aaa}, {7, &k.aab}, {1, &k.aac}, {7, &k.abb}}),
                             lincomb<R>({{5, &k.aab}, {2, &k.aac}, {14, &k.abb}, {2, &k.abc}, {4, &k.bbb}}),
                             lincomb<R>({{1, &k.aac}, {7, &k.abb}, {4, &k.abc}, {7, &k.bbb}, {1, &k.bbc}}),
                             lincomb<R>({{2, &k.abc}, {3, &k.bbb}, {2, &k.bbc}}),
                             k.bbc,
                         });
    out.m = w * (scaled(k.abb, 3) + u * k.bbb) +
            horner<R>(u, {
                             lincomb<R>({{1, &k.aaa}, {12, &k.aab}, {3, &k.aac}, {36, &k.abb}, {12, &k.abc}, {14, &k.bbb}}),
                             lincomb<R>({{9, &k.aab}, {6, &k.aac}, {60, &k.abb}, {42, &k.abc}, {3, &k.acc}, {60, &k.bbb},
                                         {24, &k.bbc}}),
                             lincomb<R>({{3, &k.aac}, {27, &k.abb}, {48, &k.abc}, {9, &k.acc}, {72, &k.bbb}, {75, &k.bbc},
                                         {9, &k.bcc}}),
                             lincomb<R>({{18, &k.abc}, {9, &k.acc}, {27, &k.bbb}, {78, &k.bbc}, {27, &k.bcc}, {1, &k.ccc}}),
                             lincomb<R>({{3, &k.acc}, {27, &k.bbc}, {27, &k.bcc}, {3, &k.ccc}}),
                             lincomb<R>({{9, &k.bcc}, {3, &k.ccc}}),
                             k.ccc,
                         });
  }
  if (perturb != 0) out.t2 = out.t2 + scaled(k.aab, perturb);
  return out;
}

// The undivided recursion in (t2, t1, t0), whose 1/(x-1) terms are
// realized by divide_by_u (which must be exact). Used as an independent
// route for checks and for the chromatic P-recursions.
template <class R>
FullValues<R> full_step(Family family, const FullValues<R>& in, const R& u, const R& w,
                        const std::function<R(const R&)>& divide_by_u) {
  using detail::lincomb;
  const Cubics<R> k(in.t2, in.t1, in.t0);
  // Letters: a = t2, b = t1, c = t0.
  FullValues<R> out;
  R d2 = divide_by_u(lincomb<R>({{6, &k.aab}, {3, &k.abb}}));
  R d1 = divide_by_u(lincomb<R>({{1, &k.aac}, {7, &k.abb}, {2, &k.abc}, {4, &k.bbb}, {1, &k.bbc}}));
  R d0 = divide_by_u(
      lincomb<R>({{12, &k.abc}, {3, &k.acc}, {14, &k.bbb}, {24, &k.bbc}, {9, &k.bcc}, {1, &k.ccc}}));
  out.t2 = w * k.aaa + d2;
  out.t1 = w * k.aab + d1;
  out.t0 = w * lincomb<R>({{3, &k.abb}, {1, &k.bbb}}) + d0;
  if (family == Family::hanoi) {
    out.t2 = out.t2 + lincomb<R>({{3, &k.aaa}, {6, &k.aab}, {3, &k.abb}});
    out.t1 = out.t1 + lincomb<R>({{7, &k.aab}, {2, &k.aac}, {14, &k.abb}, {4, &k.abc}, {7, &k.bbb}, {2, &k.bbc}}) +
             u * lincomb<R>({{1, &k.aaa}, {5, &k.aab}, {1, &k.aac}, {7, &k.abb}, {2, &k.abc}, {3, &k.bbb}, {1, &k.bbc}});
    out.t0 = out.t0 +
             lincomb<R>({{3, &k.aac}, {36, &k.abb}, {42, &k.abc}, {9, &k.acc}, {60, &k.bbb}, {75, &k.bbc}, {27, &k.bcc},
                         {3, &k.ccc}}) +
             u * lincomb<R>({{12, &k.aab}, {6, &k.aac}, {60, &k.abb}, {48, &k.abc}, {9, &k.acc}, {72, &k.bbb},
                             {78, &k.bbc}, {27, &k.bcc}, {3, &k.ccc}}) +
             (u * u) * lincomb<R>({{1, &k.aaa}, {9, &k.aab}, {3, &k.aac}, {27, &k.abb}, {18, &k.abc}, {3, &k.acc},
                                   {27, &k.bbb}, {27, &k.bbc}, {9, &k.bcc}, {1, &k.ccc}});
  }
  return out;
}

}  // namespace tutte_ss
