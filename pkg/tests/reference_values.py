"""Values transcribed from the reference tables, kept apart from the package
so the tests compare against an independent copy."""

# algorithm -> label -> (matrix, substitution images, dual substitution images)
TABLES = {'Brun': {'123': (((1, 0, 0), (0, 1, 0), (0, 1, 1)), ('1', '23', '3'), ('1', '2', '32')),
          '132': (((1, 0, 0), (0, 1, 1), (0, 0, 1)), ('1', '2', '32'), ('1', '23', '3')),
          '213': (((1, 0, 0), (0, 1, 0), (1, 0, 1)), ('13', '2', '3'), ('1', '2', '31')),
          '231': (((1, 0, 1), (0, 1, 0), (0, 0, 1)), ('1', '2', '31'), ('13', '2', '3')),
          '312': (((1, 0, 0), (1, 1, 0), (0, 0, 1)), ('12', '2', '3'), ('1', '21', '3')),
          '321': (((1, 1, 0), (0, 1, 0), (0, 0, 1)), ('1', '21', '3'), ('12', '2', '3'))},
 'Selmer': {'123': (((1, 0, 0), (0, 1, 0), (1, 0, 1)), ('13', '2', '3'), ('1', '2', '31')),
            '132': (((1, 0, 0), (1, 1, 0), (0, 0, 1)), ('12', '2', '3'), ('1', '21', '3')),
            '213': (((1, 0, 0), (0, 1, 0), (0, 1, 1)), ('1', '23', '3'), ('1', '2', '32')),
            '231': (((1, 1, 0), (0, 1, 0), (0, 0, 1)), ('1', '21', '3'), ('12', '2', '3')),
            '312': (((1, 0, 0), (0, 1, 1), (0, 0, 1)), ('1', '2', '32'), ('1', '23', '3')),
            '321': (((1, 0, 1), (0, 1, 0), (0, 0, 1)), ('1', '2', '31'), ('13', '2', '3'))},
 'Poincare': {'123': (((1, 0, 0), (1, 1, 0), (1, 1, 1)), ('123', '23', '3'), ('1', '21', '321')),
              '132': (((1, 0, 0), (1, 1, 1), (1, 0, 1)), ('132', '2', '32'), ('1', '231', '31')),
              '213': (((1, 1, 0), (0, 1, 0), (1, 1, 1)), ('13', '213', '3'), ('12', '2', '312')),
              '231': (((1, 1, 1), (0, 1, 0), (0, 1, 1)), ('1', '231', '31'), ('132', '2', '32')),
              '312': (((1, 0, 1), (1, 1, 1), (0, 0, 1)), ('12', '2', '312'), ('13', '213', '3')),
              '321': (((1, 1, 1), (0, 1, 1), (0, 0, 1)), ('1', '21', '321'), ('123', '23', '3'))},
 'FullySubtractive': {'1': (((1, 0, 0), (1, 1, 0), (1, 0, 1)),
                            ('123', '2', '3'),
                            ('1', '21', '31')),
                      '2': (((1, 1, 0), (0, 1, 0), (0, 1, 1)),
                            ('1', '231', '3'),
                            ('12', '2', '32')),
                      '3': (((1, 0, 1), (0, 1, 1), (0, 0, 1)),
                            ('1', '2', '312'),
                            ('13', '23', '3'))},
 'ARP': {'1': (((1, 1, 1), (0, 1, 0), (0, 0, 1)), ('1', '21', '31'), ('123', '2', '3')),
         '2': (((1, 0, 0), (1, 1, 1), (0, 0, 1)), ('12', '2', '32'), ('1', '231', '3')),
         '3': (((1, 0, 0), (0, 1, 0), (1, 1, 1)), ('13', '23', '3'), ('1', '2', '312')),
         '123': (((1, 0, 0), (1, 1, 0), (1, 1, 1)), ('123', '23', '3'), ('1', '21', '321')),
         '132': (((1, 0, 0), (1, 1, 1), (1, 0, 1)), ('132', '2', '32'), ('1', '231', '31')),
         '213': (((1, 1, 0), (0, 1, 0), (1, 1, 1)), ('13', '213', '3'), ('12', '2', '312')),
         '231': (((1, 1, 1), (0, 1, 0), (0, 1, 1)), ('1', '231', '31'), ('132', '2', '32')),
         '312': (((1, 0, 1), (1, 1, 1), (0, 0, 1)), ('12', '2', '312'), ('13', '213', '3')),
         '321': (((1, 1, 1), (0, 1, 1), (0, 0, 1)), ('1', '21', '321'), ('123', '23', '3'))},
 'Reverse': {'1': (((1, 1, 1), (0, 1, 0), (0, 0, 1)), ('1', '21', '31'), ('123', '2', '3')),
             '2': (((1, 0, 0), (1, 1, 1), (0, 0, 1)), ('12', '2', '32'), ('1', '231', '3')),
             '3': (((1, 0, 0), (0, 1, 0), (1, 1, 1)), ('13', '23', '3'), ('1', '2', '312')),
             '4': (((0, 1, 1), (1, 0, 1), (1, 1, 0)), ('23', '31', '12'), ('23', '13', '12'))},
 'Cassaigne': {'1': (((1, 1, 0), (0, 0, 1), (0, 1, 0)), ('1', '13', '2'), ('12', '3', '2')),
               '2': (((0, 1, 0), (1, 0, 0), (0, 1, 1)), ('2', '13', '3'), ('2', '1', '23'))}}

# algorithm -> (first coding labels of (1, e, pi), 40-letter prefix, p(0..20))
SADIC = {'Brun': (('123', '312', '312', '321', '132', '123', '312', '231', '231', '213'),
          '1232323123233231232332312323123232312323',
          (1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 22, 24, 26, 28, 30, 32, 34, 36, 38, 40, 42)),
 'Selmer': (('123', '132', '123', '132', '213', '321', '312', '231', '123', '312'),
            '1323231323223231323231323223231323213232',
            (1, 3, 7, 11, 16, 20, 24, 28, 32, 36, 40, 44, 48, 52, 56, 60, 64, 68, 72, 76, 80)),
 'Poincare': (('123', '312', '312', '213', '123', '132', '213', '213', '213', '213'),
              '1232323312323123232323123232331232312323',
              (1, 3, 5, 7, 9, 11, 14, 17, 19, 21, 23, 25, 27, 29, 31, 33, 35, 37, 39, 41, 43)),
 'FullySubtractive': (('1', '1', '2', '1', '3', '1', '3', '3', '3', '3'),
                      '1232323123233231232331232323123233231232',
                      (1,
                       3,
                       5,
                       8,
                       11,
                       14,
                       16,
                       18,
                       19,
                       20,
                       21,
                       21,
                       21,
                       21,
                       21,
                       21,
                       21,
                       21,
                       21,
                       21,
                       21)),
 'ARP': (('123', '2', '1', '123', '1', '231', '3', '3', '3', '3'),
         '1232323123233231232332312323123232312323',
         (1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 22, 24, 26, 28, 30, 32, 34, 36, 38, 40, 42)),
 'Reverse': (('4', '1', '1', '4', '3', '1', '1', '3', '3', '3'),
             '2331232331232312232323312323312323122323',
             (1, 3, 6, 9, 12, 14, 17, 20, 23, 26, 29, 32, 35, 38, 41, 44, 47, 50, 53, 56, 58)),
 'Cassaigne': (('2', '1', '2', '1', '1', '1', '1', '2', '1', '1'),
               '2323213232323132323213232321323231323232',
               (1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31, 33, 35, 37, 39, 41))}
