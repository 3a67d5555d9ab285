import environ


env = environ.Env()

broker_url = env.str('MSRLAB_BROKER_URL', default='memory://')
result_backend = env.str('MSRLAB_RESULT_BACKEND', default='cache+memory://')
task_serializer = 'json'
result_serializer = 'json'
accept_content = ['json']

# The CLI runs search branches in-process unless a real broker is configured.
task_always_eager = env.bool('MSRLAB_TASK_EAGER', default=True)
task_eager_propagates = True
