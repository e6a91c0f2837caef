''' Structural sequence memory: graph, recall, ordering and capacity model. '''
