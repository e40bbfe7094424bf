//! Seeded, partition-independent random sampling.
//!
//! Every sampled universe draws sample `i` from its own ChaCha stream, so a
//! scan split across threads in any way reproduces exactly the samples of a
//! single-threaded scan with the same seed.

use rand::{Rng, SeedableRng};
pub use rand_chacha::ChaCha8Rng;

use crate::enumerate::WordsRel;

/// RNG for one sample of a seeded universe.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniformly random relation on `n` elements.
pub fn random_relation(rng: &mut ChaCha8Rng, n: usize) -> WordsRel {
    let mut rel = WordsRel::zeroed(n);
    for w in rel.words.iter_mut() {
        *w = rng.gen();
    }
    let used = n * n;
    let slack = rel.words.len() * 64 - used;
    if slack > 0 {
        let last = rel.words.len() - 1;
        rel.words[last] &= u64::MAX >> slack;
    }
    rel
}

/// Uniform integer in 0..bound.
pub fn random_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    rng.gen_range(0..bound)
}
