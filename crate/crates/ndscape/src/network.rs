use crate::genotype::Genotype;
use crate::landscape::Landscape;

/// A neutral network: a connected component of the graph whose vertices are
/// solutions and whose edges join one-bit-flip neighbours with exactly equal
/// fitness.
#[derive(Clone, Debug)]
pub struct NeutralNetwork {
    members: Vec<Genotype>,
    fitness: f64,
    centroid: Vec<f64>,
}

impl NeutralNetwork {
    /// Member genotypes in ascending index order.
    pub fn members(&self) -> &[Genotype] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// The fitness value shared by every member.
    pub fn fitness(&self) -> f64 {
        self.fitness
    }

    /// Per-locus frequency of allele 1 over the members, length N.
    pub fn centroid(&self) -> &[f64] {
        &self.centroid
    }
}

/// The partition of a landscape into neutral networks, together with the
/// adjacency relation between networks (a one-bit-flip edge between their
/// member sets).
#[derive(Clone, Debug)]
pub struct NetworkPartition {
    n_bits: u32,
    networks: Vec<NeutralNetwork>,
    membership: Vec<u32>,
    adjacency: Vec<Vec<u32>>,
}

impl NetworkPartition {
    /// Extracts every neutral network of `l`.
    ///
    /// Networks are numbered by their smallest member index, so the output
    /// is deterministic for a given landscape.
    pub fn extract(l: &Landscape) -> Self {
        let n = l.n_bits();
        let size = l.size();
        let fitness = l.values();

        let mut uf = UnionFind::new(size);
        for g in 0..size {
            let fg = fitness[g];
            for i in 0..n {
                let h = g ^ (1usize << i);
                if h > g && fitness[h] == fg {
                    uf.union(g, h);
                }
            }
        }

        // Number components by first (= smallest) member.
        let mut component = vec![u32::MAX; size];
        let mut sizes: Vec<u32> = Vec::new();
        for g in 0..size {
            let root = uf.find(g);
            if component[root] == u32::MAX {
                component[root] = sizes.len() as u32;
                sizes.push(0);
            }
            component[g] = component[root];
            sizes[component[g] as usize] += 1;
        }

        let count = sizes.len();
        let mut members: Vec<Vec<Genotype>> = sizes
            .iter()
            .map(|&s| Vec::with_capacity(s as usize))
            .collect();
        let mut ones = vec![vec![0u32; n as usize]; count];
        for g in 0..size {
            let id = component[g] as usize;
            members[id].push(Genotype(g as u64));
            for i in 0..n {
                if g >> i & 1 == 1 {
                    ones[id][i as usize] += 1;
                }
            }
        }

        // Adjacency from the non-neutral edges.
        let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); count];
        for g in 0..size {
            let fg = fitness[g];
            for i in 0..n {
                let h = g ^ (1usize << i);
                if h > g && fitness[h] != fg {
                    let (a, b) = (component[g], component[h]);
                    adjacency[a as usize].push(b);
                    adjacency[b as usize].push(a);
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }

        let networks = members
            .into_iter()
            .zip(ones)
            .map(|(members, ones)| {
                let size = members.len() as f64;
                NeutralNetwork {
                    fitness: l.fitness(members[0]),
                    centroid: ones.into_iter().map(|c| c as f64 / size).collect(),
                    members,
                }
            })
            .collect();

        NetworkPartition {
            n_bits: n,
            networks,
            membership: component,
            adjacency,
        }
    }

    pub fn n_bits(&self) -> u32 {
        self.n_bits
    }

    pub fn networks(&self) -> &[NeutralNetwork] {
        &self.networks
    }

    pub fn len(&self) -> usize {
        self.networks.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Id of the network containing `g`.
    pub fn network_of(&self, g: Genotype) -> u32 {
        self.membership[g.index()]
    }

    /// Ids of the networks sharing a one-bit-flip edge with network `id`.
    pub fn adjacent(&self, id: u32) -> &[u32] {
        &self.adjacency[id as usize]
    }

    /// Per-genotype network id, indexed by genotype.
    pub fn membership(&self) -> &[u32] {
        &self.membership
    }
}

/// All neutral networks of `l`, ordered by smallest member index.
pub fn extract_networks(l: &Landscape) -> Vec<NeutralNetwork> {
    NetworkPartition::extract(l).networks
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size as u32).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        // path halving
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        // smaller root wins, so the component root is its minimum element
        if ra < rb {
            self.parent[rb] = ra as u32;
        } else if rb < ra {
            self.parent[ra] = rb as u32;
        }
    }
}
