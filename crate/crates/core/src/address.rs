//! Address words over `{0, 1, 2}` naming cells of the construction.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Address(Vec<u8>);

impl Address {
    pub fn empty() -> Self {
        Address(Vec::new())
    }

    pub fn from_symbols(symbols: &[u8]) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s > 2) {
            return Err(Error::Address(format!("symbol {bad} is not in {{0,1,2}}")));
        }
        Ok(Address(symbols.to_vec()))
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, j: u8) -> Address {
        debug_assert!(j < 3);
        let mut v = self.0.clone();
        v.push(j);
        Address(v)
    }

    /// Every address of length exactly `n`, in lexicographic order.
    pub fn all_of_length(n: usize) -> Vec<Address> {
        let mut out = alloc::vec![Address::empty()];
        for _ in 0..n {
            out = out.iter().flat_map(|a| (0..3).map(move |j| a.child(j))).collect();
        }
        out
    }

    /// Prefix used for hierarchical node IDs (`"021"`), empty at the root.
    pub fn prefix(&self) -> String {
        self.0.iter().map(|&s| char::from(b'0' + s)).collect()
    }
}

impl FromStr for Address {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                '2' => Ok(2),
                other => Err(Error::Address(format!("symbol {other:?} is not in {{0,1,2}}"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Address)
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.prefix())
    }
}

/// Joins an address prefix and a local label into a node ID (`"021/q1"`).
pub(crate) fn node_name(prefix: &str, local: &str) -> String {
    if prefix.is_empty() {
        String::from(local)
    } else {
        format!("{prefix}/{local}")
    }
}
