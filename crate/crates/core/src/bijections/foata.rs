use crate::perm::Permutation;

/// Foata's fundamental transformation.
///
/// Cuts the one-line word before every left-to-right maximum and reads each
/// block as a cycle. Sends D1 onto D2 and D3 onto D4.
pub fn foata(p: &Permutation) -> Permutation {
    let word = p.values();
    let mut image = vec![0u8; word.len()];
    let mut start = 0;
    while start < word.len() {
        let leader = word[start];
        let mut end = start + 1;
        while end < word.len() && word[end] < leader {
            end += 1;
        }
        let cycle = &word[start..end];
        for (i, &from) in cycle.iter().enumerate() {
            let to = cycle[(i + 1) % cycle.len()];
            image[from as usize - 1] = to;
        }
        start = end;
    }
    Permutation::from_trusted(&image)
}

/// Inverse of [`foata`]: cycles led by their maxima, sorted by increasing
/// maxima, with the parentheses erased.
pub fn foata_inverse(p: &Permutation) -> Permutation {
    let n = p.len();
    let mut seen = vec![false; n + 1];
    let mut cycles: Vec<Vec<u8>> = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x as u8);
            x = p.at(x);
        }
        let lead = cycle.iter().enumerate().max_by_key(|&(_, &v)| v).unwrap().0;
        cycle.rotate_left(lead);
        cycles.push(cycle);
    }
    cycles.sort_by_key(|c| c[0]);
    let word: Vec<u8> = cycles.concat();
    Permutation::from_trusted(&word)
}
