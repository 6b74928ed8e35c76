# Report header: what each experiment reproduces and which numbers were chosen freely
HITTING_TIME_PROVENANCE = {
    'statement': 'At the hitting time of minimum degree d, the random graph process is d-rigid with high probability',
    'check': 'frequency of RigidCertified at dimension d on G(n, tau_d); hitting-time invariant audited per trial',
    'free_choices': 'n={n}, dimensions {dims}, {trials} trials per dimension; asymptotic statement, desk-scale run',
}

GIANT_PROVENANCE = {
    'statement': 'G(n, C d log d / n) has a d-rigid component on all but a small fraction of the vertices',
    'check': 'greedy 0-extension and gluing closure, validated by the randomized rank test',
    'free_choices': 'C={C}, n={n}, d={d}; greedy growth only lower-bounds the largest rigid component',
}

BIPARTITE_TABLE_PROVENANCE = {
    'statement': 'K_(m,n) is d-rigid iff m, n >= d+1 and m + n >= C(d+2, 2)',
    'check': 'rank verdict per cell against the condition; deterministic strong bipartite partition on true cells',
    'free_choices': 'sides {min_side}..{max_side}, d up to {max_d}; mismatches re-run with fresh seeds',
}

HYPEROCTAHEDRAL_PROVENANCE = {
    'statement': 'the rigidity of K_n minus a perfect matching is n - 1 - floor(sqrt(n) + 1/2)',
    'check': 'rigidity number by upward scan of randomized rank tests',
    'free_choices': 'even n in {min_n}..{max_n}',
}

BOUND_SURVEY_PROVENANCE = {
    'statement': 'a d-rigid partition gives lambda_(C(d+1,2)+1)(L(G, q)) >= min a(G_ij) / 2 for its limit framework',
    'check': 'bound and the L^- = (M+T)/2 identity on converted CDS, type I, type II and bipartite sources',
    'free_choices': '{trials} trials, n <= {max_n}, d <= {max_d}; source graphs sampled to admit the sources',
}

REGULAR_PARTITION_PROVENANCE = {
    'statement': 'random k-regular graphs admit strong d-rigid partitions for k large against d log d',
    'check': 'strong partition construction (alpha = 1/7) and rank verdict on graphs from the pairing sampler',
    'free_choices': 'n={n}, k={k}, d={d}; retry cap stands in for the existence argument',
}

PSEUDORANDOM_PROVENANCE = {
    'statement': '(n, k, lambda)-graphs with k >= 9 d lambda and k >> d log d admit strong d-rigid partitions',
    'check': 'spectral jumbledness certificate (k/n, lambda) plus strong partition construction',
    'free_choices': 'n={n}, k={k}, d={d}; the hidden constant is not computed',
}

BIPARTITE_RANDOM_PROVENANCE = {
    'statement': 'G(n, n, p) admits a strong bipartite d-rigid partition above the connectivity threshold',
    'check': 'balanced partition with connected G[A_i, B_j] and matchings of size d in every G[A_i, B_i]',
    'free_choices': 'n={n}, p={p}, d={d}',
}

SPREAD_SPARSE_PROVENANCE = {
    'statement': 'samples of a p-spread distribution are (x, y)-sparse for x = 2L e^-(1+1/L) log(np)/p, y = L log(np)',
    'check': 'falsification search for a too-dense set in G(n, p); never claims Holds',
    'free_choices': 'n={n}, p={p}, L={Lambda}',
}

DIRAC_PROVENANCE = {
    'statement': 'minimum degree n/2 + l gives strong d-rigid partitions for d = 2l / (3 log n)',
    'check': 'common-neighbour equipartition at the derived d, then the rank verdict',
    'free_choices': 'n={n}, l={ell}; graphs are complements of random regular graphs',
}
