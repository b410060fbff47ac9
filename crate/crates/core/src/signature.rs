//! The signature rule shared by the Fock crystal and by tensor products.
//!
//! Every slot of a word contributes `eps` minus signs followed by `phi` plus
//! signs. Adjacent `+ -` pairs cancel until the word reads `-...- +...+`.
//! Lowering acts on the slot of the leftmost surviving `+`, raising on the
//! slot of the rightmost surviving `-`.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Reduced {
    pub eps: u32,
    pub phi: u32,
    pub lower_at: Option<usize>,
    pub raise_at: Option<usize>,
}

pub fn reduce<I>(slots: I) -> Reduced
where
    I: IntoIterator<Item = (u32, u32)>,
{
    // Pending pluses as (slot, count); the top of the stack is the most recent.
    let mut pending: Vec<(usize, u32)> = Vec::new();
    let mut eps = 0u32;
    let mut raise_at = None;
    for (slot, (minus, plus)) in slots.into_iter().enumerate() {
        let mut minus = minus;
        while minus > 0 {
            match pending.last_mut() {
                Some((_, count)) => {
                    let used = (*count).min(minus);
                    *count -= used;
                    minus -= used;
                    if *count == 0 {
                        pending.pop();
                    }
                }
                None => {
                    eps += minus;
                    raise_at = Some(slot);
                    minus = 0;
                }
            }
        }
        if plus > 0 {
            pending.push((slot, plus));
        }
    }
    Reduced {
        eps,
        phi: pending.iter().map(|&(_, c)| c).sum(),
        lower_at: pending.first().map(|&(s, _)| s),
        raise_at,
    }
}
