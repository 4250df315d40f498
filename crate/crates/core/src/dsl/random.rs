use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ast::{Expr, Family, RootedExpr};

const PATH_CHARS: &[char] = &['a', 'b', 'z', '0', '9', '_', '.', '/', ' ', '"', '\\', '#', '@', 'é'];

fn small(rng: &mut impl Rng) -> usize {
    rng.gen_range(0..8)
}

fn exprs(rng: &mut impl Rng, depth: usize) -> Vec<Expr> {
    let len = rng.gen_range(0..4);
    (0..len).map(|_| random_expr(rng, depth)).collect()
}

fn pairs(rng: &mut impl Rng) -> Vec<(usize, usize)> {
    let len = rng.gen_range(0..4);
    (0..len).map(|_| (small(rng), small(rng))).collect()
}

/// A random expression tree of at most `depth` levels. Trees are
/// syntactically valid but need not evaluate.
pub fn random_expr(rng: &mut impl Rng, depth: usize) -> Expr {
    let leaf = depth <= 1 || rng.gen_bool(0.3);
    if leaf {
        return match rng.gen_range(0..3) {
            0 => Expr::Atom {
                family: [Family::Complete, Family::Path, Family::Cycle][rng.gen_range(0..3)],
                order: small(rng),
            },
            1 => Expr::Inline {
                n: small(rng),
                edges: pairs(rng),
            },
            _ => Expr::File((0..rng.gen_range(0..6)).map(|_| PATH_CHARS[rng.gen_range(0..PATH_CHARS.len())]).collect()),
        };
    }
    let d = depth - 1;
    let sub = |rng: &mut _| Box::new(random_expr(rng, d));
    match rng.gen_range(0..8) {
        0 => Expr::Join(sub(rng), sub(rng)),
        1 => Expr::Union(sub(rng), sub(rng)),
        2 => Expr::RootedUniform {
            base: sub(rng),
            factor: Box::new(RootedExpr {
                expr: random_expr(rng, d),
                root: small(rng),
            }),
        },
        3 => Expr::Rooted {
            base: sub(rng),
            factors: exprs(rng, d)
                .into_iter()
                .map(|expr| RootedExpr { expr, root: small(rng) })
                .collect(),
        },
        4 => Expr::Corona {
            base: sub(rng),
            factors: exprs(rng, d),
        },
        5 => Expr::Bouquet {
            parts: exprs(rng, d),
            roots: (0..rng.gen_range(0..4)).map(|_| small(rng)).collect(),
        },
        6 => Expr::Chain {
            parts: exprs(rng, d),
            links: pairs(rng),
        },
        _ => Expr::Attach {
            parts: exprs(rng, d),
            ids: (0..rng.gen_range(0..3))
                .map(|_| ((small(rng), small(rng)), (small(rng), small(rng))))
                .collect(),
        },
    }
}

pub fn random_expr_seeded(seed: u64, depth: usize) -> Expr {
    random_expr(&mut ChaCha8Rng::seed_from_u64(seed), depth)
}
